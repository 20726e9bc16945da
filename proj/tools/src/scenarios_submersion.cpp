#include "ricci_lab/blowup.hpp"
#include "ricci_lab/gao.hpp"
#include "ricci_lab/submersion.hpp"
#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace ricci_lab::tools::detail {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

std::vector<double> to_list(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

void degenerate_grid(const Params& p, const submersion::TripleSphereMetric& m, const Eigen::MatrixXd& killing,
                     RunReport& r) {
  const int n = p.integer("grid_per_axis");
  const double edge = p.real("edge"), margin = p.real("margin"), zero_tol = p.real("zero_tol");
  if (n < 2 || !(edge > 0.0) || edge >= 0.25 || margin < 0.0) throw ConfigError("bad degenerate grid parameters");
  const double eps = m.epsilon();
  auto near_threshold = [&](double t) { return std::abs(t - eps) < margin || std::abs(t - (half_pi - eps)) < margin; };

  int inside = 0, outside = 0, skipped = 0, mismatches = 0, horizontal = 0, full_case = 0;
  double max_inside = 0.0, min_outside = std::numeric_limits<double>::infinity(), min_pairing = min_outside;
  Eigen::Vector3d witness = Eigen::Vector3d::Zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Eigen::Vector3d t(edge + (half_pi - 2 * edge) * i / (n - 1), edge + (half_pi - 2 * edge) * j / (n - 1),
                                edge + (half_pi - 2 * edge) * k / (n - 1));
        if (near_threshold(t[0]) || near_threshold(t[1]) || near_threshold(t[2])) {
          ++skipped;
          continue;
        }
        const auto dd = submersion::degenerate_directions(m, t);
        std::set<int> expected;
        for (const auto& d : dd) expected.insert(3 + d.angle);
        const auto null = submersion::ricci_null_directions(m, t, zero_tol);
        if (std::set<int>(null.begin(), null.end()) != expected) ++mismatches;
        if (dd.empty()) {
          ++outside;
          const Eigen::MatrixXd ric = m.ricci(t);
          const Eigen::MatrixXd g = submersion::metric_at(m, t);
          for (int c = 0; c < 9; ++c)
            if (ric(c, c) / g(c, c) < min_outside) {
              min_outside = ric(c, c) / g(c, c);
              witness = t;
            }
          continue;
        }
        ++inside;
        for (const auto& d : dd) {
          max_inside = std::max(max_inside, std::abs(d.ricci));
          if (d.full_case) ++full_case;
          const Eigen::VectorXd x = Eigen::VectorXd::Unit(9, 3 + d.angle);
          const submersion::HorizontalityCheck h = submersion::horizontality_check(m, killing, t, x);
          if (h.horizontal) ++horizontal;
          min_pairing = std::min(min_pairing, h.pairings.cwiseAbs().maxCoeff());
        }
      }
  r.check("degenerate_set_mismatches", mismatches, "==", 0);
  r.check("case_region_points", inside, ">", 0);
  r.check("outside_points", outside, ">", 0);
  r.check("max_ricci_on_degenerate_directions", max_inside, "<=", zero_tol);
  r.check("min_eigenvalue_outside_case_regions", min_outside, ">=", p.real("positive_floor"));
  r.check("horizontal_degenerate_directions", horizontal, "==", 0);
  r.certificates["degenerate_grid"] = {{"points_inside_case_regions", inside},
                                       {"points_outside", outside},
                                       {"points_skipped_near_thresholds", skipped},
                                       {"directions_with_full_case", full_case},
                                       {"max_abs_ricci_inside", max_inside},
                                       {"min_eigenvalue_outside", min_outside},
                                       {"min_outside_witness", to_list(witness)},
                                       {"min_vertical_pairing_of_degenerate_directions", min_pairing}};
}

}  // namespace

void run_example3(const Params& p, RunReport& r) {
  const double eps = p.real("epsilon");
  const int samples = p.integer("samples"), swaps = p.integer("swap_points");
  const double inset = p.real("inset");
  const std::uint64_t seed = p.seed("seed");
  if (samples < 1 || swaps < 1) throw ConfigError("sample counts must be positive");
  if (!(inset > 0.0) || inset >= half_pi / 2) throw ConfigError("inset must lie in (0, pi/4)");

  const submersion::FProfile f = submersion::build_f_profile(eps);
  const submersion::FProfileReport fr = submersion::verify_f_profile(f);
  r.check("f_bridge_decreasing", fr.max_d1_bridge, "<", 0.0);
  r.check("f_bridge_concave", fr.max_d2_bridge, "<", 0.0);
  r.check("f_knot_gap", fr.max_knot_gap, "<=", 1e-9);
  r.verdict("f_profile", fr.min_g, "bridge source g > 0", 0.0, fr.pass);
  add_profile(r.profiles, "f", f.f, 401);

  const submersion::TripleSphereMetric m(f);
  const Eigen::MatrixXd killing = submersion::edge_cut_killing_fields();
  degenerate_grid(p, m, killing, r);

  double swap_defect = 0.0;
  for (const auto& t : submersion::sample_box(Box(3, {0.0, half_pi}), swaps, seed + 1))
    swap_defect = std::max(swap_defect, submersion::swap_isometry_defect(m, t));
  r.check("swap_isometry_defect", swap_defect, "<=", 1e-12);

  const Box box(3, {inset, half_pi - inset});
  const submersion::QuotientScan scan = submersion::quotient_scan(m, killing, submersion::sample_box(box, samples, seed));
  r.check("oneill_samples", scan.samples, ">=", 1000);
  r.check("oneill_min_total", scan.min_total, ">", 0.0);
  r.check("oneill_min_eigenvalue", scan.min_eigenvalue, ">", 0.0);
  r.check("oneill_sum_defect", scan.max_sum_defect, "<=", 1e-9);
  r.check("oneill_min_a_term", scan.min_a_term, ">=", 0.0);
  r.check("oneill_min_t_term", scan.min_t_term, ">=", 0.0);

  r.scan = CsvTable({"t1", "t2", "t3", "ricci", "a_term", "t_term", "dn_term", "total", "min_eigenvalue"});
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const auto& row = scan.rows[i];
    r.scan.row()
        .add(row.point[0])
        .add(row.point[1])
        .add(row.point[2])
        .add(row.terms.ricci)
        .add(row.terms.a_term)
        .add(row.terms.t_term)
        .add(row.terms.dn_term)
        .add(row.terms.total)
        .add(scan.eigen_rows[i]);
  }
  r.certificates["f_profile"] = {{"epsilon", f.epsilon},
                                 {"alpha", f.alpha},
                                 {"beta", f.beta},
                                 {"max_d1_bridge", fr.max_d1_bridge},
                                 {"max_d2_bridge", fr.max_d2_bridge},
                                 {"max_knot_gap", fr.max_knot_gap},
                                 {"min_g", fr.min_g}};
  r.certificates["oneill_scan"] = {{"samples", scan.samples},
                                   {"box", {inset, half_pi - inset}},
                                   {"min_total", scan.min_total},
                                   {"min_eigenvalue", scan.min_eigenvalue},
                                   {"argmin", to_list(scan.argmin)},
                                   {"max_sum_defect", scan.max_sum_defect},
                                   {"min_a_term", scan.min_a_term},
                                   {"min_t_term", scan.min_t_term}};
  r.certificates["swap_isometry_defect"] = swap_defect;
}

void run_gao(const Params& p, RunReport& r) {
  gao::GaoConfig gc;
  gc.epsilon = p.real("epsilon");
  gc.R = p.real("R");
  gc.rho1_factor = p.real("rho1_factor");
  gc.rho2_factor = p.real("rho2_factor");
  gc.grid_per_axis = p.integer("grid_per_axis");
  gc.log_blend = p.boolean("log_blend");
  if (!(gc.R > 0.0)) throw ConfigError("R must be positive");
  const double tol = p.real("jet_tol");

  const gao::GaoReport rep = gao::run_gao(gc);
  r.check("jet_value_gap", rep.jet.value_gap, "<=", tol);
  r.check("jet_derivative_gap", rep.jet.derivative_gap, "<=", tol);
  r.check("oracle_min_ricci_eigenvalue", rep.scan.min_eigenvalue, ">", 0.0);
  r.check("identity_samples", rep.identity_samples, ">", 0);
  r.verdict("identical_outside_window", rep.identity_samples, "blend == input bitwise", rep.identity_samples,
            rep.identical_outside);

  const Eigen::Vector2d point(p.real("unit_t2"), p.real("unit_t3"));
  const gao::UnitRicciCheck unit = gao::s_ricci_unit_check(point, gc.epsilon);
  r.check("cap_ricci_closed_form_deviation", unit.closed_form_deviation, "<=", 1e-10);
  r.check("cap_ricci_oracle_deviation", unit.oracle_deviation, "<=", 1e-6);

  r.scan = CsvTable({"x1", "x2", "x3", "x4", "min_eigenvalue"});
  for (const auto& s : rep.scan.samples) r.scan.row().add(s.point[0]).add(s.point[1]).add(s.point[2]).add(s.point[3]).add(s.min_eigenvalue);
  const gao::BlendStep step = gc.log_blend ? gao::log_step(rep.rho1, rep.rho2) : gao::linear_step(rep.rho1, rep.rho2);
  add_profile(r.profiles, "blend_step", step.s, 201);
  r.certificates["gao"] = {{"rho0", rep.rho0},
                           {"rho1", rep.rho1},
                           {"rho2", rep.rho2},
                           {"grid_points", static_cast<int>(rep.scan.samples.size())},
                           {"oracle_step", rep.scan.step},
                           {"min_eigenvalue", rep.scan.min_eigenvalue},
                           {"argmin", to_list(rep.scan.argmin)},
                           {"jet_value_gap", rep.jet.value_gap},
                           {"jet_derivative_gap", rep.jet.derivative_gap},
                           {"identity_samples", rep.identity_samples},
                           {"cap_ricci_eigenvalues", to_list(unit.eigenvalues)},
                           {"cap_mixed_sectional", unit.mixed_sectional}};
}

void run_blowup(const Params& p, RunReport& r) {
  blowup::BlowupConfig bc;
  bc.epsilon = p.real("epsilon");
  bc.R_blow = p.real("R_blow");
  bc.kappa = p.real("kappa");
  bc.samples = p.integer("samples");
  bc.core_samples = p.integer("core_samples");
  bc.core_offset = p.real("core_offset");
  bc.t1_inset = p.real("t1_inset");
  bc.theta_inset = p.real("theta_inset");
  bc.seed = p.seed("seed");
  if (bc.R_blow < 0.0) throw ConfigError("R_blow must be nonnegative");

  const blowup::BlowupReport rep = blowup::blowup_pipeline(bc);
  r.verdict("gao_blend", rep.gao.scan.min_eigenvalue, "gao checks", 0.0, rep.gao.pass);
  r.verdict("glued_psi_constraints", 0.0, "all constraints", 0.0, rep.construction_psi_pass);
  r.check("glued_sigma_scan", rep.glued.sigma_scan, ">", 0.0);
  r.verdict("glued_certificate", rep.glued.sigma, "sigma > 0 and all bounds", 0.0, rep.glued.pass);
  r.check("resolved_min_total", rep.scan.min_total, ">", 0.0);
  r.check("resolved_min_eigenvalue", rep.scan.min_eigenvalue, ">", 0.0);
  r.check("resolved_sum_defect", rep.scan.max_sum_defect, "<=", 1e-9);
  r.check("resolved_min_a_term", rep.scan.min_a_term, ">=", 0.0);
  r.check("resolved_min_t_term", rep.scan.min_t_term, ">=", 0.0);
  r.check("core_mean_curvature_term", rep.core_dn_max, "<=", rep.core_kappa / 2.0, "max |(D_X N, X)| <= kappa / 2 on the core");

  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : rep.glued.bounds)
    bounds.push_back({{"name", b.name}, {"minimum", b.minimum}, {"threshold", b.threshold}, {"pass", b.pass}});
  r.certificates["resolved_block"] = {{"R_blow", rep.config.R_blow},
                                     {"scale", rep.scale},
                                     {"r_max", rep.r_max},
                                     {"samples", rep.scan.samples},
                                     {"min_total", rep.scan.min_total},
                                     {"min_eigenvalue", rep.scan.min_eigenvalue},
                                     {"argmin", to_list(rep.scan.argmin)},
                                     {"core_dn_max", rep.core_dn_max},
                                     {"core_kappa", rep.core_kappa},
                                     {"center_dn_unresolved", rep.center_dn_unresolved}};
  r.certificates["glued"] = {{"nu", rep.glued.nu},
                             {"delta1", rep.glued.delta1},
                             {"sigma", rep.glued.sigma},
                             {"sigma_scan", rep.glued.sigma_scan},
                             {"bounds", bounds},
                             {"size_bound", rep.size_bound}};
  r.scan = CsvTable({"t1", "r", "theta", "ricci", "a_term", "t_term", "dn_term", "total", "min_eigenvalue"});
  for (std::size_t i = 0; i < rep.scan.rows.size(); ++i) {
    const auto& row = rep.scan.rows[i];
    r.scan.row()
        .add(row.point[0])
        .add(row.point[1])
        .add(row.point[2])
        .add(row.terms.ricci)
        .add(row.terms.a_term)
        .add(row.terms.t_term)
        .add(row.terms.dn_term)
        .add(row.terms.total)
        .add(rep.scan.eigen_rows[i]);
  }
}

}  // namespace ricci_lab::tools::detail
