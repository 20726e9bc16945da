#include "ricci_lab/gao.hpp"

#include "ricci_lab/errors.hpp"
#include "ricci_lab/submersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ricci_lab::gao {

namespace {

// S(u) = u^3 (10 - 15u + 6u^2) and its first two derivatives.
Jet quintic(double u) {
  return {u * u * u * (10.0 - 15.0 * u + 6.0 * u * u), 30.0 * u * u * (1.0 - u) * (1.0 - u),
          60.0 * u * (1.0 - u) * (1.0 - 2.0 * u)};
}

void check_window(double rho1, double rho2) {
  if (!(rho2 > 0.0) || !(rho1 > rho2)) throw DomainError("blend window needs 0 < rho2 < rho1");
}

double sinc(double r) {
  if (std::abs(r) < 1e-4) return 1.0 - r * r / 6.0 + r * r * r * r / 120.0;
  return std::sin(r) / r;
}

void cap_block(const Eigen::Vector2d& x, Eigen::Ref<Eigen::MatrixXd> g) {
  const double r = x.norm();
  const double s = sinc(r);
  g = s * s * Eigen::Matrix2d::Identity() + cap_q(r) * x * x.transpose();
}

}  // namespace

BlendStep log_step(double rho1, double rho2) {
  check_window(rho1, rho2);
  const double span = std::log(rho1 / rho2);
  auto eval = [rho1, span](double r) -> Jet {
    const double u = std::clamp(std::log(rho1 / r) / span, 0.0, 1.0);
    const double du = -1.0 / (r * span), ddu = 1.0 / (r * r * span);
    const Jet s = quintic(u);
    return {s.value, s.d1 * du, s.d2 * du * du + s.d1 * ddu};
  };
  return {rho1, rho2, RadialProfile({rho2, rho1}, eval, Representation::closed_form, {}, "log_step")};
}

BlendStep linear_step(double rho1, double rho2) {
  check_window(rho1, rho2);
  const double width = rho1 - rho2;
  auto eval = [rho1, width](double r) -> Jet {
    const double u = std::clamp((rho1 - r) / width, 0.0, 1.0);
    const double du = -1.0 / width;
    const Jet s = quintic(u);
    return {s.value, s.d1 * du, s.d2 * du * du};
  };
  return {rho1, rho2, RadialProfile({rho2, rho1}, eval, Representation::closed_form, {}, "linear_step")};
}

BlendStep zero_step(double rho1, double rho2) {
  check_window(rho1, rho2);
  return {rho1, rho2, RadialProfile::constant({rho2, rho1}, 0.0, "zero_step")};
}

JetMatch jet_match_check(const MetricChart& g0, const MetricChart& g1, const Eigen::VectorXd& x, double tol,
                         double step) {
  if (g0.dimension() != g1.dimension() || x.size() != g0.dimension())
    throw DomainError("jet_match_check needs charts and point of one dimension");
  JetMatch j;
  j.value_gap = (g0(x) - g1(x)).cwiseAbs().maxCoeff();
  for (int k = 0; k < x.size(); ++k) {
    const Eigen::VectorXd e = step * Eigen::VectorXd::Unit(x.size(), k);
    const Eigen::MatrixXd d0 = (g0(x + e) - g0(x - e)) / (2.0 * step);
    const Eigen::MatrixXd d1 = (g1(x + e) - g1(x - e)) / (2.0 * step);
    j.derivative_gap = std::max(j.derivative_gap, (d0 - d1).cwiseAbs().maxCoeff());
  }
  j.pass = j.value_gap <= tol && j.derivative_gap <= tol;
  return j;
}

MetricChart gao_interpolate(const MetricChart& g0, const MetricChart& g1, const BlendStep& step, std::string name) {
  const int d = g0.dimension();
  if (g1.dimension() != d) throw DomainError("gao_interpolate needs charts of one dimension");
  for (int i = 0; i < d; ++i) {
    const Interval& a = g0.box()[i];
    const Interval& b = g1.box()[i];
    if (!(a.lo < 0.0 && a.hi > 0.0)) throw DomainError("gao_interpolate needs the origin inside the outer chart");
    if (b.lo > -step.rho1 || b.hi < step.rho1) throw DomainError("inner chart does not cover the rho1 ball");
  }
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(d);
  const JetMatch jm = jet_match_check(g0, g1, origin);
  if (!jm.pass) throw JetMismatchError("metrics do not share a 1-jet at the center", jm.value_gap, jm.derivative_gap);

  const BlendStep s = step;
  auto blended = [g0, g1, s](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    const double r = x.norm();
    if (r >= s.rho1) return g0(x);
    if (r <= s.rho2) return g1(x);
    const double w = s.s.value(r);
    return (1.0 - w) * g0(x) + w * g1(x);
  };

  const int per_axis = 7;
  for (int idx = 0; idx < static_cast<int>(std::pow(per_axis, d)); ++idx) {
    Eigen::VectorXd x(d);
    int rest = idx;
    for (int k = 0; k < d; ++k) {
      x[k] = -s.rho1 + 2.0 * s.rho1 * (rest % per_axis) / (per_axis - 1);
      rest /= per_axis;
    }
    const double r = x.norm();
    if (r <= s.rho2 || r >= s.rho1) continue;
    Eigen::LLT<Eigen::MatrixXd> llt(blended(x));
    if (llt.info() != Eigen::Success)
      throw SingularMetricError("blended metric not positive definite", to_std(x));
  }
  return MetricChart(std::move(name), g0.box(), blended, g0.margin());
}

double cap_q(double r) {
  const double r2 = r * r;
  if (r < 1e-2) return 1.0 / 3.0 - 2.0 * r2 / 45.0 + r2 * r2 / 315.0 - 2.0 * r2 * r2 * r2 / 14175.0;
  const double s = std::sin(r) / r;
  return (1.0 - s * s) / r2;
}

MetricChart s_cap_chart(double rho0) {
  if (!(rho0 > 0.0) || !(rho0 < std::numbers::pi / 2.0)) throw DomainError("cap chart radius must lie in (0, pi/2)");
  return MetricChart("s_cap", Box(4, {-rho0, rho0}), [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
    cap_block(x.head<2>(), g.topLeftCorner(2, 2));
    cap_block(x.tail<2>(), g.bottomRightCorner(2, 2));
    return g;
  });
}

MetricChart cp2_ball_chart(double R, double rho0) {
  if (!(R > 0.0)) throw DomainError("CP^2 scale must be positive");
  if (!(rho0 > 0.0) || !(rho0 < std::numbers::pi * R / 2.0)) throw DomainError("ball radius beyond the cut locus");
  return MetricChart("cp2_ball", Box(4, {-rho0, rho0}), [R](const Eigen::VectorXd& x) {
    const double r = x.norm();
    const double s = sinc(r / R);
    const double F = s * s;
    Eigen::Vector4d jx(-x[1], x[0], -x[3], x[2]);
    Eigen::MatrixXd g = F * Eigen::MatrixXd::Identity(4, 4) + cap_q(r / R) / (R * R) * x * x.transpose() -
                        F * F / (R * R) * jx * jx.transpose();
    return g;
  });
}

MetricChart s_polar_chart(double epsilon, double t_min) {
  if (!(t_min > 0.0) || !(epsilon > t_min)) throw DomainError("polar chart needs 0 < t_min < eps");
  const double pi = std::numbers::pi;
  Box box{{t_min, epsilon}, {0.05, pi - 0.05}, {-pi, pi}, {-pi, pi}};
  return MetricChart("s_polar", box, [](const Eigen::VectorXd& x) {
    const double t = x[0], th = x[1];
    const double s2 = std::sin(t * std::cos(th / 2.0)), s3 = std::sin(t * std::sin(th / 2.0));
    const double a = 0.25 * s2 * s2, b = 0.25 * s3 * s3;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
    g(0, 0) = 1.0;
    g(1, 1) = 0.25 * t * t;
    g(2, 2) = a + b;
    g(3, 3) = a + b;
    g(2, 3) = g(3, 2) = a - b;
    return g;
  });
}

Box CapProductMetric::base_box() const { return {{0.0, std::numbers::pi / 2.0}, {0.0, std::numbers::pi / 2.0}}; }

void CapProductMetric::blocks(const std::vector<D2>& b, submersion::DenseMatrix<D2>& B,
                              submersion::DenseMatrix<D2>& G) const {
  B(0, 0) = D2(1.0);
  B(1, 1) = D2(1.0);
  const D2 s2 = sin(b[0]), s3 = sin(b[1]);
  G(0, 0) = s2 * s2;
  G(1, 1) = s3 * s3;
}

UnitRicciCheck s_ricci_unit_check(const Eigen::Vector2d& point, double epsilon) {
  if (!(point.minCoeff() > 0.0) || point.norm() > epsilon) throw DomainError("point must lie inside both caps");
  UnitRicciCheck u;
  const CapProductMetric m;
  const submersion::CurvatureTensors c = submersion::curvature_tensors(m, point);
  u.eigenvalues = curvature::ricci_eigenvalues(c.metric, c.ricci);
  u.closed_form_deviation = (u.eigenvalues.array() - 1.0).abs().maxCoeff();
  u.mixed_sectional = c.sectional(Eigen::Vector4d::Unit(0), Eigen::Vector4d::Unit(1));

  // normal coordinates of the caps: (t2, 0) and (t3, 0)
  const MetricChart cap = s_cap_chart(std::max(epsilon, 1.5 * point.maxCoeff()));
  const Eigen::Vector4d x(point[0], 0.0, point[1], 0.0);
  const Eigen::VectorXd ev = curvature::ricci_eigenvalues(cap, x, 1e-4);
  u.oracle_deviation = (ev.array() - 1.0).abs().maxCoeff();
  return u;
}

GaoReport run_gao(const GaoConfig& cfg) {
  if (!(cfg.epsilon > 0.0) || cfg.epsilon > 0.5) throw ConfigError("gao epsilon must lie in (0, 0.5]");
  if (!(cfg.rho1_factor < 1.0) || !(cfg.rho2_factor > 0.0) || !(cfg.rho2_factor < cfg.rho1_factor))
    throw ConfigError("gao needs 0 < rho2_factor < rho1_factor < 1");
  if (cfg.grid_per_axis < 2) throw ConfigError("gao grid needs at least 2 points per axis");
  GaoReport rep;
  rep.config = cfg;
  rep.rho0 = cfg.epsilon;
  rep.rho1 = cfg.rho1_factor * cfg.epsilon;
  rep.rho2 = cfg.rho2_factor * cfg.epsilon;
  const MetricChart g0 = s_cap_chart(rep.rho0);
  const MetricChart g1 = cp2_ball_chart(cfg.R, rep.rho0);
  rep.jet = jet_match_check(g0, g1, Eigen::VectorXd::Zero(4));
  const BlendStep step = cfg.log_blend ? log_step(rep.rho1, rep.rho2) : linear_step(rep.rho1, rep.rho2);
  const MetricChart blend = gao_interpolate(g0, g1, step);

  // the grid spans the rho1 ball; outside it the blend is the cap metric itself
  const Box ball(4, {-rep.rho1 * 1.05, rep.rho1 * 1.05});
  rep.scan = curvature::min_ricci_scan(blend, curvature::uniform_grid(ball, cfg.grid_per_axis, 0.0),
                                       blend.default_step());

  rep.identical_outside = true;
  for (const auto& x : submersion::sample_box(g0.box(), 2000, 7)) {
    const double r = x.norm();
    if (r > rep.rho1) {
      ++rep.identity_samples;
      rep.identical_outside = rep.identical_outside && blend(x) == g0(x);
    } else if (r < rep.rho2) {
      ++rep.identity_samples;
      rep.identical_outside = rep.identical_outside && blend(x) == g1(x);
    }
  }
  for (const auto& x : submersion::sample_box(Box(4, {-rep.rho2, rep.rho2}), 200, 8)) {
    if (x.norm() >= rep.rho2) continue;
    ++rep.identity_samples;
    rep.identical_outside = rep.identical_outside && blend(x) == g1(x);
  }
  rep.pass = rep.jet.pass && rep.scan.positive() && rep.identical_outside;
  return rep;
}

}  // namespace ricci_lab::gao
