#include "ricci_lab/blowup.hpp"
#include "ricci_lab/errors.hpp"
#include "ricci_lab/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ricci_lab;
using namespace ricci_lab::blowup;

TEST(Blowup, KillingFieldsInResolvedAngles) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(6, 1);
  k << 1, 2, 3, 4, 5, 6;
  const Eigen::MatrixXd r = resolved_killing_fields(k);
  EXPECT_EQ(r(2, 0), 3);
  EXPECT_EQ(r(3, 0), 5);
  EXPECT_EQ(r(4, 0), 10);
  EXPECT_EQ(r(5, 0), -2);
  EXPECT_THROW(resolved_killing_fields(Eigen::MatrixXd::Zero(4, 1)), DomainError);
}

TEST(Blowup, DefaultRadius) {
  EXPECT_DOUBLE_EQ(default_blowup_radius(0.1, 0.025, std::sqrt(6.0)), 9700.0);
  EXPECT_DOUBLE_EQ(default_blowup_radius(0.1, 2.0, std::sqrt(6.0)), 100.0);
  EXPECT_THROW(default_blowup_radius(0.1, 0.0, 1.0), DomainError);
}

TEST(Blowup, ResolvedBlockCurvatureMatchesOracle) {
  construction::PsiBuilderConfig cfg;
  cfg.n = 2;
  cfg.R = 9.0;
  const construction::GluedBuild b = construction::assemble_glued_metric(cfg);
  const ResolvedBlockMetric m(submersion::build_f_profile(0.1), b.metric, 1.0, 8.0);
  Eigen::VectorXd base(3);
  base << 0.6, 5.0, 1.2;  // past sqrt(R), away from every knot
  const submersion::CurvatureTensors exact = submersion::curvature_tensors(m, base);

  const Box box{{0.3, 0.9}, {4.5, 5.5}, {0.8, 1.6}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
  const MetricChart chart("resolved", box, [&m](const Eigen::VectorXd& x) {
    return submersion::metric_at(m, x.head<3>());
  });
  Eigen::VectorXd x = Eigen::VectorXd::Zero(9);
  x.head<3>() = base;
  const Eigen::MatrixXd fd = curvature::richardson_sample(chart, x, 1e-2).ricci;
  EXPECT_LT((fd - exact.ricci).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(Blowup, RejectsBadConfig) {
  BlowupConfig cfg;
  cfg.epsilon = 0.3;
  EXPECT_THROW(blowup_pipeline(cfg), ConfigError);
  cfg.epsilon = 0.1;
  cfg.samples = 0;
  EXPECT_THROW(blowup_pipeline(cfg), ConfigError);
}
