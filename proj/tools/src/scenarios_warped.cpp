#include "ricci_lab/cohomogeneity_charts.hpp"
#include "ricci_lab/construction.hpp"
#include "ricci_lab/oracle.hpp"
#include "ricci_lab/warped.hpp"
#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ricci_lab::tools::detail {

namespace {

std::string pair_tag(int n, double R) { return "n" + std::to_string(n) + "_R" + tag(R); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

// Non-Einstein test metric for the closed-form/oracle comparison on the n = 2 chart.
warped::WarpedMetric formula_test_metric() {
  const Interval dom{0.1, 1.4};
  RadialProfile h(dom, [](double t) {
    return Jet{0.4 * std::sin(2 * t), 0.8 * std::cos(2 * t), -1.6 * std::sin(2 * t)};
  }, Representation::closed_form, {}, "h_test");
  RadialProfile f(dom, [](double t) {
    return Jet{std::sin(t) + 0.1 * t * t, std::cos(t) + 0.2 * t, -std::sin(t) + 0.2};
  }, Representation::closed_form, {}, "f_test");
  return warped::WarpedMetric(2, std::move(h), std::move(f));
}

double frame_error(const Eigen::MatrixXd& ric, const Eigen::MatrixXd& g, const warped::FrameRicci& cf) {
  // hopf chart (s, theta, psi, phi): d/ds radial, d/dtheta horizontal, d/dpsi vertical
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  return std::max({rel(ric(0, 0) / g(0, 0), cf.radial), rel(ric(1, 1) / g(1, 1), cf.horizontal),
                   rel(ric(2, 2) / g(2, 2), cf.vertical)});
}

double raw_frame_error(const MetricChart& chart, const Eigen::VectorXd& x, double step, const warped::FrameRicci& cf) {
  const curvature::CurvatureSample s = curvature::curvature_sample(chart, x, step);
  return std::abs(s.ricci(0, 0) / s.metric(0, 0) - cf.radial) + std::abs(s.ricci(1, 1) / s.metric(1, 1) - cf.horizontal) +
         std::abs(s.ricci(2, 2) / s.metric(2, 2) - cf.vertical);
}

void formula_validation(const Params& p, RunReport& r) {
  const int points = p.integer("formula_points");
  const double step = p.real("formula_step"), coarse = p.real("order_step");
  require(points >= 4 && step > 0 && coarse > 0, "formula_points >= 4 and positive steps required");
  const warped::WarpedMetric w = formula_test_metric();
  const MetricChart chart = warped::hopf_chart(w.domain(), warped::warps_of(w));
  const int thetas = 4, ts = (points + thetas - 1) / thetas;
  double worst = 0.0, min_order = std::numeric_limits<double>::infinity();
  int compared = 0;
  for (int i = 0; i < ts; ++i)
    for (int j = 0; j < thetas; ++j) {
      const double t = 0.2 + 1.1 * i / (ts - 1), th = 0.5 + 0.6 * j;
      Eigen::VectorXd x(4);
      x << t, th, 0.3, -0.4;
      const warped::FrameRicci cf = warped::ricci_hf(w, t);
      const curvature::CurvatureSample s = curvature::richardson_sample(chart, x, step);
      const double e = frame_error(s.ricci, s.metric, cf);
      worst = std::max(worst, e);
      ++compared;
    }
  // observed order of the plain central stencil at a few base points
  nlohmann::json orders = nlohmann::json::array();
  for (double t : {0.3, 0.6, 0.9, 1.2}) {
    Eigen::VectorXd x(4);
    x << t, 1.1, 0.3, -0.4;
    const warped::FrameRicci cf = warped::ricci_hf(w, t);
    const double e1 = raw_frame_error(chart, x, coarse, cf), e2 = raw_frame_error(chart, x, coarse / 2, cf);
    const double order = std::log2(e1 / e2);
    orders.push_back({{"t", t}, {"error_h", e1}, {"error_h_over_2", e2}, {"order", order}});
    min_order = std::min(min_order, order);
  }
  r.check("formula_points_compared", compared, ">=", 500);
  r.check("formula_max_relative_error", worst, "<=", p.real("formula_tol"));
  r.check("formula_observed_order", min_order, ">=", p.real("order_min"));
  r.certificates["formula_validation"] = {{"metric", "h = 0.4 sin 2t, f = sin t + 0.1 t^2, n = 2"},
                                         {"points", compared},
                                         {"max_relative_error", worst},
                                         {"orders", orders}};
}

}  // namespace

void run_einstein(const Params& p, RunReport& r) {
  const auto ns = p.integers("n_values");
  const auto Rs = p.reals("R_values");
  const int samples = p.integer("samples"), opts = p.integer("oracle_points");
  const double ostep = p.real("oracle_step");
  require(!ns.empty() && !Rs.empty(), "n_values and R_values must be nonempty");
  require(samples >= 2 && opts >= 2 && ostep > 0, "need samples >= 2, oracle_points >= 2, oracle_step > 0");
  for (int n : ns) require(n >= 2, "n must be at least 2");
  for (double R : Rs) require(R > 0, "R must be positive");

  r.scan = CsvTable({"n", "R", "r", "closed_form_deviation", "oracle_relative_deviation"});
  nlohmann::json certs = nlohmann::json::array();
  for (int n : ns)
    for (double R : Rs) {
      const std::string key = pair_tag(n, R);
      const double lambda = 2.0 * (n + 1) / (R * R);
      const warped::PhiMetric phi = warped::fubini_study_phi(n, R);
      const warped::EinsteinReport cf = warped::einstein_report(phi, lambda, {0.005 * R, 0.995 * R}, samples);
      const warped::EinsteinReport polar =
          warped::einstein_report(warped::fubini_study_metric(R, n), lambda, {0.005 * R, 0.995 * R * std::numbers::pi / 2}, samples);
      const MetricChart chart = warped::orbit_chart(n, {0.0, R}, warped::warps_of(phi));
      double worst = 0.0, worst_r = 0.0;
      for (int i = 0; i < opts; ++i) {
        const double rad = R * (0.05 + 0.9 * i / (opts - 1));
        const Eigen::VectorXd ev =
            curvature::richardson_eigenvalues(chart, warped::orbit_chart_point(n, rad), ostep * std::min(rad, R - rad));
        const double dev = (ev.array() - lambda).abs().maxCoeff() / lambda;
        const warped::PhiRicci pr = warped::ricci_phi(phi, rad);
        r.scan.row().add(n).add(R).add(rad).add(std::max(std::abs(pr.radial_vertical - lambda), std::abs(pr.horizontal - lambda))).add(dev);
        if (dev > worst) {
          worst = dev;
          worst_r = rad;
        }
      }
      r.check(key + "_closed_form_deviation", cf.max_deviation, "<=", p.real("closed_form_tol"));
      r.check(key + "_polar_closed_form_deviation", polar.max_deviation, "<=", p.real("closed_form_tol"));
      r.check(key + "_oracle_relative_deviation", worst, "<=", p.real("oracle_tol"));
      certs.push_back({{"n", n},
                       {"R", R},
                       {"lambda", lambda},
                       {"closed_form_deviation", cf.max_deviation},
                       {"closed_form_worst_r", cf.worst_radius},
                       {"polar_deviation", polar.max_deviation},
                       {"oracle_relative_deviation", worst},
                       {"oracle_worst_r", worst_r}});
      add_profile(r.profiles, "phi_" + key, phi.phi(), 101);
    }
  r.certificates["einstein"] = certs;
  formula_validation(p, r);
}

void run_calabi(const Params& p, RunReport& r) {
  const auto ns = p.integers("n_values");
  const double lo = p.real("r_lo"), hi = p.real("r_hi"), ostep = p.real("oracle_step");
  const int samples = p.integer("samples"), opts = p.integer("oracle_points");
  require(!ns.empty(), "n_values must be nonempty");
  require(lo > 1.0 && hi > lo, "need 1 < r_lo < r_hi");
  require(samples >= 2 && opts >= 2 && ostep > 0, "need samples >= 2, oracle_points >= 2, oracle_step > 0");
  for (int n : ns) require(n >= 2, "n must be at least 2");

  r.scan = CsvTable({"n", "r", "closed_form_max", "oracle_max"});
  nlohmann::json certs = nlohmann::json::array();
  for (int n : ns) {
    const std::string key = "n" + std::to_string(n);
    const double outer = hi + 1.0;
    const warped::PhiMetric phi = warped::calabi_phi(n, outer);
    const warped::EinsteinReport cf = warped::einstein_report(phi, 0.0, {lo, hi}, samples);
    const RadialProfile psi = warped::psi_from_phi(phi);
    double psi_max = 0.0;
    for (int i = 0; i < samples; ++i) psi_max = std::max(psi_max, std::abs(psi.value(lo + (hi - lo) * i / (samples - 1))));
    const MetricChart chart = warped::orbit_chart(n, {1.0, outer}, warped::warps_of(phi));
    double worst = 0.0;
    for (int i = 0; i < opts; ++i) {
      const double rad = lo + (hi - lo) * i / (opts - 1);
      const Eigen::VectorXd ev = curvature::richardson_eigenvalues(chart, warped::orbit_chart_point(n, rad),
                                                                   ostep * std::min(rad - 1.0, outer - rad));
      const double dev = ev.cwiseAbs().maxCoeff();
      const warped::PhiRicci pr = warped::ricci_phi(phi, rad);
      r.scan.row().add(n).add(rad).add(std::max(std::abs(pr.radial_vertical), std::abs(pr.horizontal))).add(dev);
      worst = std::max(worst, dev);
    }
    r.check(key + "_closed_form_ricci", cf.max_deviation, "<=", p.real("closed_form_tol"));
    r.check(key + "_psi_vanishes", psi_max, "<=", p.real("closed_form_tol"));
    r.check(key + "_oracle_ricci", worst, "<=", p.real("oracle_tol"));
    certs.push_back({{"n", n}, {"closed_form_max", cf.max_deviation}, {"psi_max", psi_max}, {"oracle_max", worst}});
    add_profile(r.profiles, "phi_calabi_" + key, phi.phi(), 101);
  }
  r.certificates["calabi"] = certs;
}

void run_theorem2(const Params& p, RunReport& r) {
  const int n = p.integer("n");
  const auto Rs = p.reals("R_values");
  require(!Rs.empty(), "R_values must be nonempty");
  std::optional<double> nu;
  if (p.text("nu") != "auto") {
    nu = p.real("nu");
    require(*nu >= 0.0, "nu must be nonnegative");
  }
  std::vector<construction::PsiBuilderConfig> cfgs;
  for (double R : Rs) {
    construction::PsiBuilderConfig c;
    c.n = n;
    c.R = R;
    c.kappa = p.real("kappa");
    c.grid_points = p.integer("grid_points");
    c.validate();
    cfgs.push_back(c);
  }
  const int cert_grid = p.integer("certificate_grid");
  require(cert_grid >= 10, "certificate_grid must be at least 10");

  r.scan = CsvTable({"R", "bound", "region_lo", "region_hi", "family", "minimum", "threshold", "applicable", "pass"});
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : cfgs) {
    const std::string key = "R" + tag(c.R);
    try {
      const construction::GluedBuild b = construction::assemble_glued_metric(c, nu);
      for (const auto& k : b.psi.checks) r.verdict(key + "_psi_" + k.name, k.measured, "constraint", k.threshold, k.pass);
      r.check(key + "_phi_at_core", std::abs(b.phi.phi_at_core - 1.0), "<=", p.real("core_tol"));
      r.check(key + "_phi_slope_at_core", std::abs(b.phi.slope_at_core + 2.0 * n), "<=", p.real("core_tol"));
      r.check(key + "_phi_tail", b.phi.tail_deviation, "<=", p.real("tail_tol"));
      const construction::GluedCertificate cert = construction::certify_bounds(b.metric, cert_grid);
      for (const auto& bc : cert.bounds)
        r.scan.row()
            .add(c.R)
            .add(bc.name)
            .add(bc.region.lo)
            .add(bc.region.hi)
            .add(bc.family)
            .add(bc.minimum)
            .add(bc.threshold)
            .add(bc.applicable ? std::string("yes") : std::string("no"))
            .add(bc.pass ? std::string("yes") : std::string("no"));
      r.verdict(key + "_certificate", cert.sigma, "sigma > 0 and all bounds", 0.0, cert.pass && cert.sigma > 0.0);
      const warped::CollapseLimits lim = warped::smoothness_limits(b.phi.phi);
      r.check(key + "_limit_df_dt", std::abs(lim.df_dt), "<=", p.real("limit_tol"));
      r.check(key + "_limit_dh_dt", std::abs(lim.dh_dt - n), "<=", p.real("limit_tol"));
      nlohmann::json size;
      try {
        const construction::SizeReport s = construction::rescale_and_size(b.metric, cert.sigma);
        r.verdict(key + "_size_bound", s.d_measured, "<= (rel 1e-12)", s.d_bound, s.holds);
        size = {{"epsilon", s.epsilon}, {"d_bound", s.d_bound}, {"d_measured", s.d_measured}, {"holds", s.holds}};
      } catch (const Error& e) {
        r.failure(key + "_size_bound", e.what());
        size = e.what();
      }
      const construction::EtaBounds eta = construction::admissible_eta_bounds(n, c.R, c.kappa);
      certs.push_back({{"R", c.R},
                       {"eta", eta.eta},
                       {"eta_lower", eta.lower},
                       {"eta_upper", eta.upper},
                       {"blend_parameter", b.psi.blend_parameter},
                       {"blend_window", {b.psi.blend_window.lo, b.psi.blend_window.hi}},
                       {"nu", b.metric.nu},
                       {"delta1", b.metric.delta1},
                       {"c_R", b.metric.c_R},
                       {"sigma", cert.sigma},
                       {"sigma_scan", cert.sigma_scan},
                       {"sigma_cap", cert.sigma_cap},
                       {"witness_family", cert.witness_family},
                       {"witness_r", cert.witness_r},
                       {"min_radial", cert.min_radial},
                       {"min_vertical", cert.min_vertical},
                       {"min_horizontal", cert.min_horizontal},
                       {"smoothness_limits", {lim.df_dt, lim.dh_dt}},
                       {"size", size},
                       {"certificate_pass", cert.pass}});
      add_profile(r.profiles, "psi_" + key, b.psi.psi, 201);
      add_profile(r.profiles, "phi_" + key, b.phi.phi.phi(), 201);
      add_profile(r.profiles, "delta_" + key, b.metric.delta, 201);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      r.failure(key + "_construction", e.what());
    }
  }
  r.certificates["theorem2"] = certs;
}

}  // namespace ricci_lab::tools::detail
