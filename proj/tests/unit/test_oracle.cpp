#include "ricci_lab/chart.hpp"
#include "ricci_lab/errors.hpp"
#include "ricci_lab/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ricci_lab;
using namespace ricci_lab::curvature;

namespace {

// round S^3 of radius 1 in Hopf coordinates (eta, xi1, xi2)
MetricChart round_s3() {
  return MetricChart("s3", {{0.1, 1.4}, {-3.0, 3.0}, {-3.0, 3.0}}, [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
    g(0, 0) = 1.0;
    g(1, 1) = std::sin(x(0)) * std::sin(x(0));
    g(2, 2) = std::cos(x(0)) * std::cos(x(0));
    return g;
  });
}

// flat R^3 in cylindrical coordinates
MetricChart flat_cylindrical() {
  return MetricChart("flat", {{0.5, 2.0}, {-3.0, 3.0}, {-1.0, 1.0}}, [](const Eigen::VectorXd& x) {
    Eigen::Vector3d d(1.0, x(0) * x(0), 1.0);
    return Eigen::MatrixXd(d.asDiagonal());
  });
}

}  // namespace

TEST(Oracle, RoundSphereIsEinstein) {
  const Eigen::Vector3d x(0.7, 0.2, -0.4);
  const Eigen::MatrixXd g = round_s3()(x);
  const Eigen::MatrixXd ric = ricci_at(round_s3(), x, 1e-3);
  // second-order stencil: error ~ step^2 times O(10)
  EXPECT_LT((ric - 2.0 * g).cwiseAbs().maxCoeff(), 1e-4);
  const Eigen::VectorXd ev = ricci_eigenvalues(round_s3(), x, 1e-3);
  EXPECT_NEAR(ev.minCoeff(), 2.0, 1e-4);
  EXPECT_NEAR(ev.maxCoeff(), 2.0, 1e-4);
  EXPECT_NEAR(ricci_quadratic_form(round_s3(), x, Eigen::Vector3d(1, 1, 1), 1e-3), 2.0, 1e-4);
}

TEST(Oracle, FlatCoordinatesHaveZeroRicci) {
  const Eigen::Vector3d x(1.1, 0.5, 0.0);
  EXPECT_LT(ricci_at(flat_cylindrical(), x, 1e-3).cwiseAbs().maxCoeff(), 1e-5);
  const Christoffel c = christoffel_at(flat_cylindrical(), x, 1e-3);
  EXPECT_NEAR(c(0, 1, 1), -1.1, 1e-6);     // -r
  EXPECT_NEAR(c(1, 0, 1), 1.0 / 1.1, 1e-6);  // 1/r
}

TEST(Oracle, RichardsonBeatsPlainStencil) {
  const Eigen::Vector3d x(0.3, 0.0, 0.0);
  const double step = 2e-2;
  const Eigen::MatrixXd g = round_s3()(x);
  const double plain = (ricci_at(round_s3(), x, step) - 2.0 * g).cwiseAbs().maxCoeff();
  const double rich = (richardson_sample(round_s3(), x, step).ricci - 2.0 * g).cwiseAbs().maxCoeff();
  EXPECT_LT(rich, plain / 20.0);
  EXPECT_NEAR(richardson_eigenvalues(round_s3(), x, step / 4).minCoeff(), 2.0, 1e-5);
}

TEST(Oracle, StencilMustFitInBox) {
  EXPECT_THROW(ricci_at(round_s3(), Eigen::Vector3d(0.1005, 0.0, 0.0), 1e-3), BoundaryError);
  EXPECT_THROW(ricci_at(round_s3(), Eigen::Vector3d(0.7, 0.0, 0.0), 0.0), DomainError);
  EXPECT_THROW(ricci_at(round_s3(), Eigen::Vector2d(0.7, 0.0), 1e-3), DomainError);
}

TEST(Oracle, SingularMetricIsReported) {
  const MetricChart degenerate("deg", {{-1.0, 1.0}, {-1.0, 1.0}}, [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
    g(1, 1) = x(0);
    return g;
  });
  EXPECT_THROW(ricci_at(degenerate, Eigen::Vector2d(-0.5, 0.0), 1e-3), SingularMetricError);
}

TEST(Scan, MinimumOverGrid) {
  const RicciScan scan = min_ricci_scan(round_s3(), uniform_grid(round_s3().box(), 3, 0.1));
  EXPECT_EQ(scan.samples.size(), 27u);
  EXPECT_NEAR(scan.min_eigenvalue, 2.0, 1e-4);
  EXPECT_TRUE(scan.positive());
}
