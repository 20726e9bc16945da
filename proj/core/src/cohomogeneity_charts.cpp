#include "ricci_lab/cohomogeneity_charts.hpp"

#include <cmath>
#include <numbers>

namespace ricci_lab::warped {

using std::numbers::pi;

WarpFunction warps_of(const WarpedMetric& w) {
  return [w](double t) { return OrbitWarps{1.0, w.h().value(t), w.f().value(t)}; };
}

WarpFunction warps_of(const PhiMetric& p) {
  return [p](double r) {
    const double u2 = 1.0 - p.phi().value(r);
    return OrbitWarps{1.0 / u2, r * std::sqrt(u2), r};
  };
}

MetricChart hopf_chart(Interval base, WarpFunction warps, std::string name) {
  Box box{base, {0.0, pi}, {-10.0, 10.0}, {-10.0, 10.0}};
  return MetricChart(std::move(name), box, [warps](const Eigen::VectorXd& x) {
    const OrbitWarps w = warps(x[0]);
    const double c = std::cos(x[1]), s = std::sin(x[1]);
    const double v = 0.25 * w.h * w.h, hz = 0.25 * w.f * w.f;
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    g(0, 0) = w.base;
    g(1, 1) = hz;
    g(2, 2) = v;
    g(2, 3) = g(3, 2) = v * c;
    g(3, 3) = v * c * c + hz * s * s;
    return Eigen::MatrixXd(g);
  });
}

MetricChart phase_chart(int n, Interval base, WarpFunction warps, std::string name) {
  if (n < 2) throw DomainError("phase_chart needs n >= 2");
  Box box{base};
  for (int i = 0; i < n - 1; ++i) box.push_back({0.0, pi / 2.0});
  for (int i = 0; i < n; ++i) box.push_back({-10.0, 10.0});
  return MetricChart(std::move(name), box, [n, warps](const Eigen::VectorXd& x) {
    const int d = 2 * n;
    const OrbitWarps w = warps(x[0]);
    // moduli x_k and the diagonal round metric on the xi coordinates
    Eigen::VectorXd mod(n);
    Eigen::VectorXd xi_weight(n - 1);
    double sin_prod = 1.0;
    for (int k = 0; k < n - 1; ++k) {
      xi_weight[k] = sin_prod * sin_prod;
      mod[k] = sin_prod * std::cos(x[1 + k]);
      sin_prod *= std::sin(x[1 + k]);
    }
    mod[n - 1] = sin_prod;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
    g(0, 0) = w.base;
    const double f2 = w.f * w.f, h2 = w.h * w.h;
    for (int k = 0; k < n - 1; ++k) g(1 + k, 1 + k) = f2 * xi_weight[k];
    const int a0 = n;  // first phase index
    for (int k = 0; k < n; ++k) {
      const double mk = mod[k] * mod[k];
      g(a0 + k, a0 + k) += f2 * mk;
      for (int l = 0; l < n; ++l) g(a0 + k, a0 + l) += (h2 - f2) * mk * mod[l] * mod[l];
    }
    return g;
  });
}

MetricChart orbit_chart(int n, Interval base, WarpFunction warps, std::string name) {
  return n == 2 ? hopf_chart(base, std::move(warps), std::move(name))
                : phase_chart(n, base, std::move(warps), std::move(name));
}

Eigen::VectorXd orbit_chart_point(int n, double s) {
  Eigen::VectorXd x(2 * n);
  x[0] = s;
  if (n == 2) {
    x << s, 1.1, 0.3, -0.4;
    return x;
  }
  for (int k = 0; k < n - 1; ++k) x[1 + k] = 0.6 + 0.15 * k;
  for (int k = 0; k < n; ++k) x[n + k] = 0.2 * k;
  return x;
}

}  // namespace ricci_lab::warped
