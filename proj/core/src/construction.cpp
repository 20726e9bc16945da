#include "ricci_lab/construction.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ricci_lab::construction {

namespace {

// Quintic smoothstep x^3 (10 - 15x + 6x^2): C^2-flat at both ends.
const Polynomial& smoothstep() {
  static const Polynomial s({0.0, 0.0, 0.0, 10.0, -15.0, 6.0});
  return s;
}
constexpr double smoothstep_max_d1 = 1.875;
const double smoothstep_max_d2 = 10.0 / std::sqrt(3.0);

// c2 (a + x)^2 + c0 as a polynomial in the local variable x.
Polynomial shifted_quadratic(double c2, double c0, double a) { return Polynomial({c2 * a * a + c0, 2.0 * c2 * a, c2}); }

struct PsiPieces {
  std::vector<double> breaks;
  std::vector<Polynomial> pieces;
  Interval window;
};

PsiPieces psi_pieces(const PsiBuilderConfig& cfg, double lambda) {
  const double R2 = cfg.R * cfg.R;
  const double r1 = cfg.r1();
  const double kb = cfg.kappa / R2;              // barrier kb (r^2 - 1)
  const double kr = 2.0 * (cfg.n + 1.0) / R2;   // psi_R = kr r^2
  double a, c;
  if (lambda <= 1.0) {
    a = 1.0;
    c = 1.0 + lambda * (r1 - 1.0);
  } else {
    a = 1.0 + (lambda - 1.0) * (r1 - 1.0);
    c = r1;
  }
  PsiPieces out;
  out.window = {a, c};
  if (a > 1.0) {
    out.breaks.push_back(1.0);
    out.pieces.push_back(shifted_quadratic(kb, -kb, 1.0));
  }
  out.breaks.push_back(a);
  const Polynomial barrier = shifted_quadratic(kb, -kb, a);
  const Polynomial target = shifted_quadratic(kr, 0.0, a);
  const Polynomial step = smoothstep().compose_affine(1.0 / (c - a), 0.0);
  out.pieces.push_back(barrier + step * (target - barrier));
  if (c < r1) {
    out.breaks.push_back(c);
    out.pieces.push_back(shifted_quadratic(kr, 0.0, c));
  }
  out.breaks.push_back(r1);
  out.pieces.push_back(shifted_quadratic(kr, 0.0, r1));
  out.breaks.push_back(cfg.R);
  return out;
}

double weighted_integral_of_pieces(const PsiPieces& p, int n, double upper) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.breaks.size(); ++i) {
    const double a = p.breaks[i];
    const double b = std::min(p.breaks[i + 1], upper);
    if (b <= a) break;
    const Polynomial& piece = p.pieces[i];
    auto f = [&](double x) { return piece(x) * std::pow(a + x, 2 * n - 1); };
    total += boost::math::quadrature::gauss<double, 20>::integrate(f, 0.0, b - a);
  }
  return total;
}

}  // namespace

double PsiBuilderConfig::r1() const { return std::sqrt(R); }

double PsiBuilderConfig::eta() const { return std::pow(r1(), 2.0 * (n + 1)) / (R * R) - 1.0; }

void PsiBuilderConfig::validate() const {
  if (n < 2) throw DomainError("psi builder needs n >= 2");
  if (!(R > 4.0)) throw DomainError("psi builder needs R > 4");
  if (!(kappa > 0.0)) throw DomainError("kappa must be positive");
  if (kappa > 2.0 * (n + 1)) throw DomainError("kappa above 2(n+1) leaves no room below psi_R");
  if (grid_points < 10) throw DomainError("verification grid too small");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
}

EtaBounds admissible_eta_bounds(int n, double R, double kappa) {
  if (n < 2) throw DomainError("admissible_eta_bounds needs n >= 2");
  EtaBounds b;
  const double r1 = std::sqrt(R);
  const double R2 = R * R;
  const double psi_r1 = 2.0 * (n + 1.0) * r1 * r1 / R2;
  const double r2n = std::pow(r1, 2.0 * n);
  b.lower = kappa * r2n / R2 * (r1 * r1 / (2.0 * n + 2.0) - 1.0 / (2.0 * n));
  b.upper = psi_r1 / (2.0 * n) * (r2n - 1.0);
  b.eta = std::pow(r1, 2.0 * (n + 1)) / R2 - 1.0;
  b.inequalities_hold = b.lower < b.eta && b.eta < b.upper;
  b.radius_admissible = R > 2.0;
  b.feasible = b.inequalities_hold && b.radius_admissible;
  return b;
}

bool PsiConstruction::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConstraintCheck& c) { return c.pass; });
}

double psi_weighted_integral(const RadialProfile& psi, int n, double r1) {
  std::vector<double> knots{1.0, r1};
  for (double k : psi.knots())
    if (k > 1.0 && k < r1) knots.push_back(k);
  std::sort(knots.begin(), knots.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    auto f = [&](double s) { return psi.value(s) * std::pow(s, 2 * n - 1); };
    total += boost::math::quadrature::gauss<double, 20>::integrate(f, knots[i], knots[i + 1]);
  }
  return total;
}

PsiConstruction build_psi_n(const PsiBuilderConfig& cfg) {
  cfg.validate();
  const EtaBounds bounds = admissible_eta_bounds(cfg.n, cfg.R, cfg.kappa);
  if (!bounds.feasible) throw InfeasibleError("eta lies outside the admissible interval for this (n, R, kappa)");
  const double eta = cfg.eta();
  const double r1 = cfg.r1();

  // The weighted integral decreases as the blend window moves right.
  auto integral = [&](double lambda) { return weighted_integral_of_pieces(psi_pieces(cfg, lambda), cfg.n, r1); };
  double lo = 1e-9, hi = 2.0 - 1e-9;
  if (!(integral(lo) > eta && integral(hi) < eta))
    throw InfeasibleError("blend family cannot reach the integral target eta = " + std::to_string(eta));
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (integral(mid) > eta ? lo : hi) = mid;
  }
  const double lambda = 0.5 * (lo + hi);
  PsiPieces pieces = psi_pieces(cfg, lambda);

  PsiConstruction out{cfg, RadialProfile::piecewise(pieces.breaks, pieces.pieces, "psi_n"), lambda, pieces.window,
                      0.0, {}};
  out.integral = psi_weighted_integral(out.psi, cfg.n, r1);

  const double R2 = cfg.R * cfg.R;
  const double slope_floor = cfg.kappa / R2;
  double min_slope = std::numeric_limits<double>::infinity();
  double min_barrier_gap = std::numeric_limits<double>::infinity();
  double tail_gap = 0.0;
  std::vector<double> grid;
  for (int i = 0; i <= cfg.grid_points; ++i) grid.push_back(1.0 + (cfg.R - 1.0) * i / cfg.grid_points);
  grid.insert(grid.end(), pieces.breaks.begin(), pieces.breaks.end());
  for (double r : grid) {
    const Jet j = out.psi(r);
    min_slope = std::min(min_slope, j.d1);
    if (r <= r1) min_barrier_gap = std::min(min_barrier_gap, j.value - cfg.kappa * (r * r - 1.0) / R2);
    if (r >= r1) tail_gap = std::max(tail_gap, std::abs(j.value - 2.0 * (cfg.n + 1.0) * r * r / R2));
  }
  const Jet knot = out.psi.knot_defect();
  const double c2_defect = std::max({knot.value, knot.d1, knot.d2});

  out.checks.push_back({"slope_above_kappa_over_R2", min_slope, slope_floor, min_slope > slope_floor});
  out.checks.push_back({"above_barrier_on_core", min_barrier_gap, 0.0, min_barrier_gap >= -1e-13});
  const double at_core = out.psi.value(1.0);
  out.checks.push_back({"vanishes_at_core", std::abs(at_core), 0.0, at_core == 0.0});
  const double miss = std::abs(out.integral - eta);
  out.checks.push_back({"weighted_integral_matches_eta", miss, cfg.tolerance, miss <= cfg.tolerance});
  const double tail = std::max(tail_gap, c2_defect);
  out.checks.push_back({"equals_psi_R_beyond_r1_with_C2_knots", tail, 1e-10, tail <= 1e-10});
  return out;
}

PhiConstruction build_phi_n(const PsiConstruction& psi) {
  const PsiBuilderConfig& cfg = psi.config;
  PhiConstruction out{warped::phi_from_psi(psi.psi, cfg.n), 0.0, 0.0, 0.0};
  const Jet core = out.phi.phi()(1.0);
  out.phi_at_core = core.value;
  out.slope_at_core = core.d1;
  const double r1 = cfg.r1();
  const int samples = 2000;
  for (int i = 0; i <= samples; ++i) {
    const double r = r1 + (cfg.R - r1) * i / samples;
    out.tail_deviation = std::max(out.tail_deviation, std::abs(out.phi.phi().value(r) - r * r / (cfg.R * cfg.R)));
  }
  return out;
}

double minimum_of_phi(const warped::PhiMetric& phi, int samples) {
  const Interval d = phi.domain();
  double best = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i <= samples; ++i) {
    const double v = phi.phi().value(d.lo + d.width() * i / samples);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  double a = d.lo + d.width() * std::max(0, best_i - 1) / samples;
  double b = d.lo + d.width() * std::min(samples, best_i + 1) / samples;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 80; ++it) {
    const double x1 = b - g * (b - a), x2 = a + g * (b - a);
    if (phi.phi().value(x1) < phi.phi().value(x2))
      b = x2;
    else
      a = x1;
  }
  return std::min(best, phi.phi().value(0.5 * (a + b)));
}

double default_nu(double c, double R, double kappa) {
  if (!(c > 0.0)) throw DomainError("c(R) must be positive");
  return 0.9 * std::min({2.0 * c / (1.0 + c), 0.1, kappa / (R * R)});
}

DeltaProfile build_delta_nu(double nu, double R, double c) {
  if (!(R > 4.0)) throw DomainError("build_delta_nu needs R > 4");
  if (nu < 0.0) throw DomainError("nu must be non-negative");
  if (nu > 2.0 * c / (1.0 + c) * (1.0 + 1e-12))
    throw DomainError("nu exceeds 2c/(1+c) = " + std::to_string(2.0 * c / (1.0 + c)));
  const double r1 = std::sqrt(R);
  const double L = r1 - 2.0;
  // scale so that |delta|, |delta'|, |delta''| <= nu
  const double d1 = nu * std::min({1.0, L / smoothstep_max_d1, L * L / smoothstep_max_d2});
  const Polynomial flat({d1});
  const Polynomial ramp = Polynomial({d1}) - d1 * smoothstep().compose_affine(1.0 / L, 0.0);
  const Polynomial zero({0.0});
  return {RadialProfile::piecewise({1.0, 2.0, r1, R}, {flat, ramp, zero}, "delta_nu"), nu, d1};
}

double GluedMetric::r1() const { return std::sqrt(R); }

GluedBuild assemble_glued_metric(const PsiBuilderConfig& cfg, std::optional<double> nu) {
  PsiConstruction psi = build_psi_n(cfg);
  PhiConstruction phi = build_phi_n(psi);
  const double c = minimum_of_phi(phi.phi);
  const double chosen = nu.value_or(default_nu(c, cfg.R, cfg.kappa));
  DeltaProfile delta = build_delta_nu(chosen, cfg.R, c);
  GluedMetric g{cfg.n, cfg.R, cfg.kappa, psi.psi, phi.phi, delta.delta, chosen, delta.delta1, c};
  return {std::move(psi), std::move(phi), std::move(g)};
}

namespace {

warped::FrameRicci glued_formula(const GluedMetric& g, double r) {
  const Jet phi = g.phi.phi()(r);
  const Jet delta = g.delta(r);
  const double n = g.n;
  const double w = 1.0 - phi.value;
  const double k = std::sqrt(1.0 - delta.value);
  const double k_r = -delta.d1 / (2.0 * k);
  const double k_rr = -delta.d2 / (2.0 * k) - delta.d1 * delta.d1 / (4.0 * k * k * k);
  const double f = r * k;
  const double f_r = k + r * k_r;
  const double f_rr = 2.0 * k_r + r * k_rr;
  const double f_tt = w * f_rr - 0.5 * phi.d1 * f_r;
  const double h_t = w - 0.5 * r * phi.d1;
  const double h_tt_over_h = -(3.0 * phi.d1 + r * phi.d2) / (2.0 * r);
  const double r2 = r * r, k2 = k * k, k4 = k2 * k2;
  const double mixed = f_r * h_t / (r2 * k);
  warped::FrameRicci out;
  out.radial = -h_tt_over_h - (2.0 * n - 2.0) * f_tt / f;
  out.vertical = -h_tt_over_h - (2.0 * n - 2.0) * mixed + (2.0 * n - 2.0) * w / (r2 * k4);
  out.horizontal = -f_tt / f - mixed - (2.0 * n - 3.0) * w * f_r * f_r / (r2 * k2) + 2.0 * n / (r2 * k2) -
                   2.0 * w / (r2 * k4);
  return out;
}

}  // namespace

warped::FrameRicci ricci_glued(const GluedMetric& g, double r) {
  if (!(r > 1.0) || r > g.R) throw DomainError("ricci_glued needs 1 < r <= R; use ricci_glued_core at r = 1");
  return glued_formula(g, r);
}

warped::FrameRicci ricci_glued_core(const GluedMetric& g) { return glued_formula(g, 1.0); }

double core_shell_horizontal(const GluedMetric& g, double r) {
  if (r < 1.0 || r > 2.0) throw DomainError("core_shell_horizontal is stated on [1, 2]");
  const double d1 = g.delta1;
  const double w = 1.0 - g.phi.phi().value(r);
  return g.psi.value(r) / (r * r) + 2.0 * d1 / ((1.0 - d1) * r * r) * (g.n - (2.0 - d1) / (1.0 - d1) * w);
}

warped::WarpFunction warps_of(const GluedMetric& g) {
  return [g](double r) {
    const double w = 1.0 - g.phi.phi().value(r);
    const double k2 = 1.0 - g.delta.value(r);
    return warped::OrbitWarps{1.0 / w, r * std::sqrt(w), r * std::sqrt(k2)};
  };
}

GluedCertificate certify_bounds(const GluedMetric& g, int grid_points) {
  if (!(g.kappa > 0.0)) throw DomainError("certify_bounds needs kappa > 0");
  if (grid_points < 10) throw DomainError("certification grid too small");
  GluedCertificate c;
  c.n = g.n;
  c.R = g.R;
  c.kappa = g.kappa;
  c.nu = g.nu;
  c.delta1 = g.delta1;
  c.c_R = g.c_R;
  c.grid_points = grid_points;

  const double R2 = g.R * g.R;
  const double inf = std::numeric_limits<double>::infinity();
  struct Track {
    double value = std::numeric_limits<double>::infinity();
    double r = 0.0;
    void see(double v, double at) {
      if (v < value) {
        value = v;
        r = at;
      }
    }
  };
  Track radial, vertical, horizontal, core_h, outer_h, rv;
  for (int i = 0; i <= grid_points; ++i) {
    const double r = 1.0 + (g.R - 1.0) * i / grid_points;
    const warped::FrameRicci ric = i == 0 ? ricci_glued_core(g) : ricci_glued(g, r);
    radial.see(ric.radial, r);
    vertical.see(ric.vertical, r);
    horizontal.see(ric.horizontal, r);
    rv.see(std::min(ric.radial, ric.vertical), r);
    if (r <= 2.0) core_h.see(ric.horizontal, r);
    if (r >= 2.0) outer_h.see(ric.horizontal, r);
  }
  c.min_radial = radial.value;
  c.min_vertical = vertical.value;
  c.min_horizontal = horizontal.value;
  const Track* worst = &radial;
  c.witness_family = "radial";
  if (vertical.value < worst->value) {
    worst = &vertical;
    c.witness_family = "vertical";
  }
  if (horizontal.value < worst->value) {
    worst = &horizontal;
    c.witness_family = "horizontal";
  }
  c.witness_r = worst->r;
  c.sigma_scan = R2 * worst->value;
  c.sigma_cap = g.n >= 3 ? 2.0 * g.delta1 / (1.0 - g.delta1) * (g.n - 2.0) / 4.0 : 0.0;
  c.sigma = g.n >= 3 ? std::min(c.sigma_scan, c.sigma_cap) : c.sigma_scan;

  const bool high = g.n >= 3;
  BoundCheck core{"core_horizontal", {1.0, 2.0}, "horizontal", core_h.value, c.sigma_cap, core_h.r, high, false};
  core.pass = high && c.sigma_cap > 0.0 && core_h.value >= c.sigma_cap;
  BoundCheck outer{"outer_horizontal", {2.0, g.R}, "horizontal", outer_h.value, 2.0 * g.kappa / R2, outer_h.r,
                   true, false};
  outer.pass = outer_h.value >= outer.threshold;
  BoundCheck radial_vertical{"radial_vertical", {1.0, g.R}, "radial/vertical", rv.value, g.kappa / (2.0 * R2), rv.r,
                             true, false};
  radial_vertical.pass = rv.value >= radial_vertical.threshold;
  BoundCheck uniform{"uniform_lower_bound", {1.0, g.R}, c.witness_family, c.sigma_scan, 0.0, c.witness_r, true,
                     false};
  uniform.pass = c.sigma_scan > 0.0;
  BoundCheck cap{"core_sigma_cap", {1.0, 1.0}, "horizontal", c.sigma_cap, c.sigma, 1.0, high, false};
  cap.pass = high && c.sigma_cap > 0.0 && c.sigma_cap >= c.sigma;
  c.bounds = {core, outer, radial_vertical, uniform, cap};

  c.pass = c.sigma > 0.0 && c.sigma < inf;
  for (const auto& b : c.bounds)
    if (b.applicable && !b.pass) c.pass = false;
  return c;
}

SizeReport rescale_and_size(const GluedMetric& g, double sigma) {
  if (g.n == 2) throw DegenerateBoundError("the size estimate carries a factor n-2 and is vacuous for n = 2");
  if (!(sigma > 0.0)) throw DomainError("rescale_and_size needs a certified sigma > 0");
  SizeReport s;
  s.epsilon = 1.0 / std::sqrt(g.R);
  s.d_measured = std::sqrt(1.0 - g.delta1) / g.R;
  s.d_bound = s.epsilon * s.epsilon * std::sqrt((g.n - 2.0) / (g.n - 2.0 + 2.0 * sigma));
  s.holds = s.d_measured <= s.d_bound * (1.0 + 1e-12);
  return s;
}

}  // namespace ricci_lab::construction
