#pragma once

#include "ricci_lab/cohomogeneity_charts.hpp"
#include "ricci_lab/profile.hpp"
#include "ricci_lab/warped.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ricci_lab::construction {

struct PsiBuilderConfig {
  int n = 3;
  double R = 9.0;
  double kappa = 1.0;
  int grid_points = 10000;   // post-hoc verification grid
  double tolerance = 1e-10;  // on the weighted integral

  double r1() const;   // sqrt(R)
  double eta() const;  // r1^{2(n+1)}/R^2 - 1
  void validate() const;
};

struct EtaBounds {
  double lower = 0.0;
  double upper = 0.0;
  double eta = 0.0;
  bool inequalities_hold = false;  // lower < eta < upper
  bool radius_admissible = false;  // R > 2
  bool feasible = false;           // both
};

EtaBounds admissible_eta_bounds(int n, double R, double kappa);

struct ConstraintCheck {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// Profile psi_n on [1, R]: a C^2 blend of the barrier kappa (r^2-1)/R^2 into
// psi_R = 2(n+1) r^2/R^2, with the blend window tuned to meet the integral target.
struct PsiConstruction {
  PsiBuilderConfig config;
  RadialProfile psi;
  double blend_parameter = 0.0;
  Interval blend_window;
  double integral = 0.0;
  std::vector<ConstraintCheck> checks;

  bool all_pass() const;
};

PsiConstruction build_psi_n(const PsiBuilderConfig& cfg);

// Weighted integral of psi s^{2n-1} over [1, r1] by Gauss-Legendre on each polynomial piece.
double psi_weighted_integral(const RadialProfile& psi, int n, double r1);

struct PhiConstruction {
  warped::PhiMetric phi;
  double phi_at_core = 0.0;
  double slope_at_core = 0.0;
  double tail_deviation = 0.0;  // sup over [r1, R] of |phi - r^2/R^2|
};

PhiConstruction build_phi_n(const PsiConstruction& psi);

// min of phi over its domain: dense grid followed by golden-section refinement.
double minimum_of_phi(const warped::PhiMetric& phi, int samples = 10000);

// 0.9 min(2c/(1+c), 0.1, kappa/R^2); the last cap keeps the bump small against the
// kappa/R^2 curvature scale.
double default_nu(double c, double R, double kappa);

struct DeltaProfile {
  RadialProfile delta;
  double nu = 0.0;
  double delta1 = 0.0;
};

// Non-increasing bump: constant on [1, 2], quintic smoothstep down to 0 on [2, sqrt(R)].
DeltaProfile build_delta_nu(double nu, double R, double c);

struct GluedMetric {
  int n = 3;
  double R = 9.0;
  double kappa = 1.0;
  RadialProfile psi;
  warped::PhiMetric phi;
  RadialProfile delta;
  double nu = 0.0;
  double delta1 = 0.0;
  double c_R = 0.0;

  double r1() const;
};

struct GluedBuild {
  PsiConstruction psi;
  PhiConstruction phi;
  GluedMetric metric;
};

// Full pipeline; nu defaults to default_nu(c(R), R, kappa).
GluedBuild assemble_glued_metric(const PsiBuilderConfig& cfg, std::optional<double> nu = std::nullopt);

// dr^2/(1-phi) + r^2 (1-phi) ds_v^2 + (1-delta) r^2 ds_h^2 on the unit frame, r in (1, R].
warped::FrameRicci ricci_glued(const GluedMetric& g, double r);
// Limit of the same expressions at the collapsed orbit r = 1.
warped::FrameRicci ricci_glued_core(const GluedMetric& g);
// Horizontal Ricci on [1, 2] where delta is constant, in the closed form
// psi/r^2 + 2 d1/((1-d1) r^2) (n - (2-d1)/(1-d1) (1-phi)).
double core_shell_horizontal(const GluedMetric& g, double r);

warped::WarpFunction warps_of(const GluedMetric& g);

struct BoundCheck {
  std::string name;
  Interval region;
  std::string family;
  double minimum = 0.0;
  double threshold = 0.0;
  double witness_r = 0.0;
  bool applicable = true;
  bool pass = false;
};

struct GluedCertificate {
  int n = 0;
  double R = 0.0;
  double kappa = 0.0;
  double nu = 0.0;
  double delta1 = 0.0;
  double c_R = 0.0;
  int grid_points = 0;
  double min_radial = 0.0;
  double min_vertical = 0.0;
  double min_horizontal = 0.0;
  double sigma_scan = 0.0;  // R^2 times the smallest Ricci value on the grid
  double sigma_cap = 0.0;   // 2 d1/(1-d1) (n-2)/4, zero when n = 2
  double sigma = 0.0;
  std::string witness_family;
  double witness_r = 0.0;
  std::vector<BoundCheck> bounds;
  bool pass = false;
};

GluedCertificate certify_bounds(const GluedMetric& g, int grid_points = 4000);

struct SizeReport {
  double epsilon = 0.0;
  double d_bound = 0.0;
  double d_measured = 0.0;
  bool holds = false;
};

SizeReport rescale_and_size(const GluedMetric& g, double sigma);

}  // namespace ricci_lab::construction
