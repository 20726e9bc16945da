#include "ricci_lab/errors.hpp"
#include "ricci_lab/gao.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ricci_lab;
using namespace ricci_lab::gao;

namespace {

const double R6 = std::sqrt(6.0);

}  // namespace

TEST(Step, MonotoneWithFlatEnds) {
  for (const BlendStep& s : {log_step(0.05, 0.025), linear_step(0.05, 0.025)}) {
    EXPECT_NEAR(s.s.value(0.025), 1.0, 1e-14);
    EXPECT_NEAR(s.s.value(0.05), 0.0, 1e-14);
    EXPECT_NEAR(s.s.derivative(0.025, 1), 0.0, 1e-9);
    EXPECT_NEAR(s.s.derivative(0.05, 2), 0.0, 1e-6);
    for (double r = 0.025; r < 0.05; r += 1e-3) EXPECT_LE(s.s.derivative(r, 1), 1e-12);
  }
  EXPECT_THROW(log_step(0.02, 0.05), DomainError);
}

TEST(CapQ, SeriesMatchesDirectFormula) {
  EXPECT_NEAR(cap_q(0.0), 1.0 / 3.0, 1e-15);
  for (double r : {1e-4, 1e-3, 1e-2, 0.1, 1.0}) {
    const double s = std::sin(r) / r;
    EXPECT_NEAR(cap_q(r), (1.0 - s * s) / (r * r), r < 1e-2 ? 1e-7 : 1e-12) << r;
  }
}

TEST(Jets, CapAndBallShareOneJet) {
  const JetMatch j = jet_match_check(s_cap_chart(0.05), cp2_ball_chart(R6, 0.05), Eigen::Vector4d::Zero());
  EXPECT_TRUE(j.pass);
  EXPECT_LT(j.value_gap, 1e-12);
  EXPECT_LT(j.derivative_gap, 1e-8);
}

TEST(Interpolate, VerbatimOutsideTheWindow) {
  const MetricChart g0 = s_cap_chart(0.05), g1 = cp2_ball_chart(R6, 0.05);
  const MetricChart g = gao_interpolate(g0, g1, log_step(0.04, 0.02));
  const Eigen::Vector4d outer(0.03, -0.02, 0.02, 0.01), inner(0.01, 0.005, -0.004, 0.0);
  EXPECT_TRUE(g(outer) == g0(outer));
  EXPECT_TRUE(g(inner) == g1(inner));
  const Eigen::Vector4d mid(0.02, 0.015, 0.0, 0.0);
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g(mid)).eigenvalues().minCoeff(), 0.0);
}

TEST(Interpolate, RejectsMismatchedJets) {
  const MetricChart tilted("tilted", Box(4, {-0.05, 0.05}), [](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd((1.0 + 0.5 * x(0)) * Eigen::MatrixXd::Identity(4, 4));
  });
  EXPECT_FALSE(jet_match_check(s_cap_chart(0.05), tilted, Eigen::Vector4d::Zero()).pass);
  EXPECT_THROW(gao_interpolate(s_cap_chart(0.05), tilted, log_step(0.04, 0.02)), JetMismatchError);
}

TEST(UnitCaps, ProductOfUnitSpheres) {
  const UnitRicciCheck u = s_ricci_unit_check(Eigen::Vector2d(0.03, 0.05));
  EXPECT_LE(u.closed_form_deviation, 1e-10);
  EXPECT_LE(u.oracle_deviation, 1e-6);
  EXPECT_NEAR(u.mixed_sectional, 0.0, 1e-12);
  for (int i = 0; i < u.eigenvalues.size(); ++i) EXPECT_NEAR(u.eigenvalues[i], 1.0, 1e-10);
  EXPECT_THROW(s_ricci_unit_check(Eigen::Vector2d(0.2, 0.2)), DomainError);
}

TEST(Pipeline, DefaultConfigurationIsPositive) {
  GaoConfig cfg;
  cfg.grid_per_axis = 5;
  const GaoReport rep = run_gao(cfg);
  EXPECT_TRUE(rep.pass);
  EXPECT_GT(rep.scan.min_eigenvalue, 0.0);
  EXPECT_TRUE(rep.identical_outside);
  EXPECT_GT(rep.identity_samples, 0);
  cfg.rho2_factor = 0.6;
  EXPECT_THROW(run_gao(cfg), ConfigError);
}
