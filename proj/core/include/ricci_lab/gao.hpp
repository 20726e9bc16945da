#pragma once

#include "ricci_lab/chart.hpp"
#include "ricci_lab/invariant_metric.hpp"
#include "ricci_lab/oracle.hpp"
#include "ricci_lab/profile.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ricci_lab::gao {

// Monotone C^2 step s(r): 1 on [0, rho2], 0 on [rho1, inf).
struct BlendStep {
  double rho1 = 0.0;
  double rho2 = 0.0;
  RadialProfile s;  // on [rho2, rho1]
};

// Quintic smoothstep in log r.
BlendStep log_step(double rho1, double rho2);
// Quintic smoothstep in r.
BlendStep linear_step(double rho1, double rho2);
// s = 0 on the whole window (g0 everywhere outside rho2).
BlendStep zero_step(double rho1, double rho2);

struct JetMatch {
  double value_gap = 0.0;
  double derivative_gap = 0.0;
  bool pass = false;
};

// Values and first derivatives of two charts at x (central differences).
JetMatch jet_match_check(const MetricChart& g0, const MetricChart& g1, const Eigen::VectorXd& x, double tol = 1e-8,
                         double step = 1e-4);

// (1 - s) g0 + s g1 in |x|; g1 verbatim below rho2, g0 verbatim above rho1. Throws
// JetMismatchError when the 1-jets at the origin differ, SingularMetricError with a witness
// when the blend fails to be positive definite on a check grid.
MetricChart gao_interpolate(const MetricChart& g0, const MetricChart& g1, const BlendStep& step,
                            std::string name = "gao_blend");

// (1 - (sin r / r)^2) / r^2 with a series near 0.
double cap_q(double r);

// Product of two unit 2-sphere caps in normal coordinates (x1, x2) and (x3, x4).
MetricChart s_cap_chart(double rho0);
// CP^2 of Einstein constant 6/R^2 in normal coordinates at a point, complex structure
// J(x1, x2, x3, x4) = (-x2, x1, -x4, x3).
MetricChart cp2_ball_chart(double R, double rho0);

// S = D^2 x D^2 in (t, theta, psi, phi) with t2 = t cos(theta/2), t3 = t sin(theta/2),
// psi2 = (psi + phi)/2, psi3 = (psi - phi)/2.
MetricChart s_polar_chart(double epsilon, double t_min = 1e-2);

// Base (t2, t3), angles (psi2, psi3): dt^2 + sin^2 t dpsi^2 on each factor.
class CapProductMetric : public submersion::InvariantBlockMetric {
 public:
  int base_dim() const override { return 2; }
  int angle_dim() const override { return 2; }
  Box base_box() const override;
  std::string name() const override { return "cap_product"; }
  void blocks(const std::vector<D2>& b, submersion::DenseMatrix<D2>& B, submersion::DenseMatrix<D2>& G) const override;
};

struct UnitRicciCheck {
  Eigen::VectorXd eigenvalues;    // exact derivatives
  double closed_form_deviation = 0.0;
  double oracle_deviation = 0.0;  // finite differences on the Cartesian cap chart
  double mixed_sectional = 0.0;   // K(d/dt2, d/dt3)
};

// point = (t2, t3) inside the caps.
UnitRicciCheck s_ricci_unit_check(const Eigen::Vector2d& point, double epsilon = 0.1);

struct GaoConfig {
  double epsilon = 0.1;
  double R = 2.449489742783178;  // sqrt(6): Einstein constant 1
  double rho1_factor = 0.5;      // rho1 = factor * eps
  double rho2_factor = 0.25;
  int grid_per_axis = 9;
  bool log_blend = true;
};

struct GaoReport {
  GaoConfig config;
  double rho0 = 0.0, rho1 = 0.0, rho2 = 0.0;
  JetMatch jet;
  curvature::RicciScan scan;
  int identity_samples = 0;
  bool identical_outside = false;
  bool pass = false;
};

GaoReport run_gao(const GaoConfig& cfg);

}  // namespace ricci_lab::gao
