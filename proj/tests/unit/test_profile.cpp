#include "ricci_lab/errors.hpp"
#include "ricci_lab/profile.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace ricci_lab;

TEST(Polynomial, EvaluateAndDerivatives) {
  const Polynomial p({1.0, -2.0, 3.0});  // 1 - 2x + 3x^2
  EXPECT_DOUBLE_EQ(p(2.0), 9.0);
  const Jet j = p.jet(2.0);
  EXPECT_DOUBLE_EQ(j.d1, 10.0);
  EXPECT_DOUBLE_EQ(j.d2, 6.0);
  EXPECT_EQ(p.derivative().degree(), 1);
  EXPECT_DOUBLE_EQ(p.antiderivative(5.0)(0.0), 5.0);
}

TEST(PolynomialProperty, AntiderivativeInvertsDerivative) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> coeffs(1 + trial % 6);
    for (auto& x : coeffs) x = c(rng);
    const Polynomial p(coeffs);
    const Polynomial q = p.antiderivative(coeffs[0]).derivative();
    for (double x : {-1.5, 0.0, 0.7, 2.0}) ASSERT_NEAR(q(x), p(x), 1e-10 * (1 + std::abs(p(x))));
    const Polynomial s = p.compose_affine(2.0, -1.0);
    for (double x : {-1.0, 0.3, 1.1}) ASSERT_NEAR(s(x), p(2 * x - 1), 1e-9 * (1 + std::abs(p(2 * x - 1))));
    for (double x : {-0.4, 0.9}) ASSERT_NEAR((p * p)(x), p(x) * p(x), 1e-9 * (1 + p(x) * p(x)));
  }
}

TEST(Profile, ClosedFormJets) {
  const RadialProfile s({0.0, 3.0}, [](double x) { return Jet{std::sin(x), std::cos(x), -std::sin(x)}; });
  EXPECT_DOUBLE_EQ(s.value(1.0), std::sin(1.0));
  EXPECT_DOUBLE_EQ(s.derivative(1.0, 2), -std::sin(1.0));
  EXPECT_THROW(s(4.0), DomainError);
  EXPECT_THROW(s.derivative(1.0, 3), DomainError);
  EXPECT_EQ(s.representation(), Representation::closed_form);
}

TEST(Profile, PiecewiseKnotDefect) {
  // x^2 glued to 1 + 2(x - 1) + (x - 1)^2: C^2 at x = 1
  const auto smooth = RadialProfile::piecewise({0.0, 1.0, 2.0}, {Polynomial({0, 0, 1}), Polynomial({1, 2, 1})});
  const Jet d = smooth.knot_defect();
  EXPECT_LT(std::max({d.value, d.d1, d.d2}), 1e-14);
  EXPECT_DOUBLE_EQ(smooth.value(1.5), 2.25);
  // second piece with a kink
  const auto kink = RadialProfile::piecewise({0.0, 1.0, 2.0}, {Polynomial({0, 0, 1}), Polynomial({1, 1})});
  EXPECT_NEAR(kink.knot_defect().d1, 1.0, 1e-14);
  EXPECT_NEAR(kink.knot_defect().d2, 2.0, 1e-14);
}

TEST(Profile, DualEvaluationMatchesJet) {
  const RadialProfile e({-1.0, 1.0}, [](double x) { return Jet{std::exp(2 * x), 2 * std::exp(2 * x), 4 * std::exp(2 * x)}; });
  using D1 = Dual<double>;
  using D2 = Dual<D1>;
  const D2 x{D1{0.3, 1.0}, D1{1.0, 0.0}};
  const D2 y = evaluate(e, x);
  EXPECT_DOUBLE_EQ(y.v.v, std::exp(0.6));
  EXPECT_DOUBLE_EQ(y.v.d, 2 * std::exp(0.6));
  EXPECT_DOUBLE_EQ(y.d.d, 4 * std::exp(0.6));
}

TEST(Profile, CsvRows) {
  std::ostringstream out;
  RadialProfile::constant({0.0, 1.0}, 2.0).write_csv(out, 3, "c,");
  int lines = 0;
  for (char ch : out.str()) lines += ch == '\n';
  EXPECT_EQ(lines, 3);
  EXPECT_EQ(out.str().rfind("c,", 0), 0u);
}
