#pragma once

#include "ricci_lab/chart.hpp"
#include "ricci_lab/warped.hpp"

#include <functional>

namespace ricci_lab::warped {

// Metric data of a cohomogeneity-one metric at base coordinate s:
// g_ss ds^2 + h^2 ds_v^2 + f^2 ds_h^2.
struct OrbitWarps {
  double base = 1.0;
  double h = 0.0;
  double f = 0.0;
};

using WarpFunction = std::function<OrbitWarps(double)>;

WarpFunction warps_of(const WarpedMetric& w);
WarpFunction warps_of(const PhiMetric& p);  // base coordinate r

// n = 2 chart (s, theta, psi, phi):
//   g_ss ds^2 + 1/4 h^2 (dpsi + cos theta dphi)^2 + 1/4 f^2 (dtheta^2 + sin^2 theta dphi^2)
MetricChart hopf_chart(Interval base, WarpFunction warps, std::string name = "hopf");

// Any n, chart (s, xi_1..xi_{n-1}, theta_1..theta_n) from z_k = x_k(xi) e^{i theta_k} with
// hyperspherical x(xi); vertical form sum x_k^2 dtheta_k, horizontal = round minus vertical.
MetricChart phase_chart(int n, Interval base, WarpFunction warps, std::string name = "phase");

// hopf_chart for n = 2, phase_chart otherwise.
MetricChart orbit_chart(int n, Interval base, WarpFunction warps, std::string name = "orbit");

// A point of the orbit chart over base value s with fixed generic angles.
Eigen::VectorXd orbit_chart_point(int n, double s);

}  // namespace ricci_lab::warped
