#include "ricci_lab/errors.hpp"
#include "ricci_lab/oracle.hpp"
#include "ricci_lab/submersion.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace ricci_lab;
using namespace ricci_lab::submersion;

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

const TripleSphereMetric& metric() {
  static const TripleSphereMetric m(build_f_profile(0.1));
  return m;
}

}  // namespace

TEST(FProfile, ConcaveDecreasingBridge) {
  const FProfile f = build_f_profile(0.1);
  const FProfileReport rep = verify_f_profile(f);
  EXPECT_TRUE(rep.pass);
  EXPECT_LT(rep.max_d1_bridge, 0.0);
  EXPECT_LT(rep.max_d2_bridge, 0.0);
  EXPECT_LE(rep.max_knot_gap, 1e-9);
  EXPECT_DOUBLE_EQ(f.f.value(0.05), 1.0);
  EXPECT_NEAR(f.f.value(half_pi - 0.05), std::cos(half_pi - 0.05), 1e-15);
}

TEST(FProfile, RoundSphereFactorIsEinstein) {
  // dt^2 + cos^2 t dphi^2 + sin^2 t dpsi^2
  const FactorRicci r = factor_ricci({std::cos(0.4), -std::sin(0.4), -std::cos(0.4)},
                                     {std::sin(0.4), std::cos(0.4), -std::sin(0.4)});
  EXPECT_NEAR(r.tt, 2.0, 1e-14);
  EXPECT_NEAR(r.phi, 2.0, 1e-14);
  EXPECT_NEAR(r.psi, 2.0, 1e-14);
}

TEST(TripleSphere, ExactCurvatureMatchesClosedForm) {
  for (const auto& t : sample_box(Box(3, {0.05, half_pi - 0.05}), 20, 5)) {
    const Eigen::Vector3d p = t;
    const CurvatureTensors c = curvature_tensors(metric(), p);
    ASSERT_LT((c.ricci - metric().ricci(p)).cwiseAbs().maxCoeff(), 1e-9) << p.transpose();
  }
}

TEST(TripleSphere, OracleAgreesWithExactCurvature) {
  const MetricChart chart = metric().chart(0.05);
  Eigen::VectorXd x(9);
  x << 0.3, 0.9, 1.2, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6;
  auto err = [&](double h) {
    return (curvature::richardson_sample(chart, x, h).ricci - metric().ricci(x.head<3>())).cwiseAbs().maxCoeff();
  };
  EXPECT_LT(err(2e-3), 1e-6);
  // fourth order under step halving
  EXPECT_GT(std::log2(err(1e-2) / err(5e-3)), 3.5);
}

TEST(TripleSphere, DegenerateDirectionsAreRicciNull) {
  // t1 in the cos region is irrelevant; t2 < eps flattens phi2, t3 < eps flattens phi3
  const Eigen::Vector3d t(0.7, 0.05, 0.05);
  const auto dd = degenerate_directions(metric(), t);
  ASSERT_FALSE(dd.empty());
  std::vector<int> expected;
  for (const auto& d : dd) {
    expected.push_back(3 + d.angle);
    EXPECT_NEAR(d.ricci, 0.0, 1e-10);
  }
  std::sort(expected.begin(), expected.end());
  auto null = ricci_null_directions(metric(), t);
  std::sort(null.begin(), null.end());
  EXPECT_EQ(null, expected);
  const Eigen::MatrixXd k = edge_cut_killing_fields();
  for (const auto& d : dd)
    EXPECT_FALSE(horizontality_check(metric(), k, t, Eigen::VectorXd::Unit(9, 3 + d.angle)).horizontal);
  EXPECT_TRUE(horizontality_check(metric(), k, t, Eigen::VectorXd::Unit(9, 0)).horizontal);
  EXPECT_TRUE(degenerate_directions(metric(), Eigen::Vector3d(0.7, 0.7, 0.7)).empty());
}

TEST(TripleSphere, SwapIsAnIsometry) {
  for (const auto& t : sample_box(Box(3, {0.0, half_pi}), 16, 3))
    EXPECT_LT(swap_isometry_defect(metric(), Eigen::Vector3d(t)), 1e-12);
  const Eigen::VectorXd s = swap_point(Eigen::Vector3d(0.1, 0.2, 0.3));
  EXPECT_NEAR(s[0], half_pi - 0.3, 1e-15);
  EXPECT_NEAR(s[2], half_pi - 0.1, 1e-15);
}

TEST(Oneill, TermsMatchQuotientOracle) {
  const Eigen::MatrixXd k = edge_cut_killing_fields();
  const Eigen::Vector3d t(0.5, 0.8, 1.0);
  const Eigen::VectorXd x = Eigen::VectorXd::Unit(9, 0);
  const OneillTerms terms = oneill_terms(metric(), k, t, x);
  EXPECT_NEAR(terms.total, terms.sum(), 1e-12);
  EXPECT_GE(terms.a_term, 0.0);
  EXPECT_GE(terms.t_term, 0.0);
  const MetricChart q = quotient_chart(metric(), k, killing_annihilator(k));
  Eigen::VectorXd y = Eigen::VectorXd::Zero(q.dimension());
  y.head<3>() = t;
  const Eigen::MatrixXd ric = curvature::richardson_sample(q, y, 1e-2).ricci;
  EXPECT_NEAR(ric(0, 0), terms.total, 1e-5);
}

TEST(Oneill, QuotientScanOnSamples) {
  const QuotientScan scan =
      quotient_scan(metric(), edge_cut_killing_fields(), sample_box(Box(3, {0.05, half_pi - 0.05}), 40, 42));
  EXPECT_EQ(scan.samples, 40);
  EXPECT_TRUE(scan.pass);
  EXPECT_GT(scan.min_eigenvalue, 0.0);
  EXPECT_LE(scan.max_sum_defect, 1e-9);
}

TEST(Sampling, DeterministicPerSeed) {
  const Box box(3, {0.0, 1.0});
  const auto a = sample_box(box, 10, 9), b = sample_box(box, 10, 9), c = sample_box(box, 10, 10);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(a[i], b[i]);
    for (int j = 0; j < 3; ++j) EXPECT_TRUE(a[i][j] >= 0.0 && a[i][j] <= 1.0);
  }
  EXPECT_NE(a[0], c[0]);
}

TEST(Killing, EdgeCutFieldsHaveRankThree) {
  const Eigen::MatrixXd k = edge_cut_killing_fields();
  EXPECT_EQ(k.rows(), 6);
  EXPECT_EQ(k.cols(), 3);
  EXPECT_EQ(Eigen::FullPivLU<Eigen::MatrixXd>(k).rank(), 3);
}
