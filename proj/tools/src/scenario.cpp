#include "ricci_lab/tools/scenario.hpp"

#include "ricci_lab/errors.hpp"
#include "scenarios.hpp"

#include <chrono>
#include <cmath>
#include <regex>

namespace ricci_lab::tools {

namespace {

using T = ParamType;

ParamSpec seed_spec(const std::string& def, const std::string& help = "seed echoed in the report") {
  return {"seed", T::seed, def, help};
}

std::vector<ScenarioInfo> build_catalog() {
  std::vector<ScenarioInfo> c;
  c.push_back({"lemma1", "Lemma 1 (with Theorem 1 bookkeeping)",
               "freeness scan of the vertex-cut T^3 action on S^3 x S^3 x S^3, brute-force cross-check, "
               "moment-angle dimensions of the three cut cubes",
               {{"preset", T::text, "vertex_cut", "weight preset; explicit rows u1..v3 replace it"},
                {"n_max", T::integer, "6", "torsion order searched by the brute-force stabilizer"},
                {"expected_stratum", T::text, "v1=v2=v3=0", "the single stratum with nontrivial stabilizer"},
                {"expected_group", T::text, "Z_3", "its stabilizer"},
                seed_spec("1")}});
  c.push_back({"lemma2", "Lemma 2",
               "freeness scan of the edge-cut action: Z_2 stabilizers exactly over the strata of F1 and F2",
               {{"preset", T::text, "edge_cut", "weight preset; explicit rows u1..v3 replace it"},
                {"n_max", T::integer, "6", "torsion order searched by the brute-force stabilizer"},
                seed_spec("1")}});
  c.push_back({"einstein", "Lemma 3 (Fubini-Study polar form) and the Ricci formulas of Lemma 4",
               "phi = r^2/R^2 is Einstein with constant 2(n+1)/R^2; closed-form warped Ricci against the oracle",
               {{"n_values", T::integer_list, "2 3", "complex dimensions"},
                {"R_values", T::real_list, "1 2 5", "radii"},
                {"samples", T::integer, "500", "closed-form grid per (n, R)"},
                {"oracle_points", T::integer, "25", "oracle points per (n, R)"},
                {"oracle_step", T::real, "3e-3", "oracle step relative to the distance from the collapsing ends"},
                {"closed_form_tol", T::real, "1e-8", "max |Ric - lambda g| from the closed form"},
                {"oracle_tol", T::real, "1e-5", "max relative eigenvalue deviation from the oracle"},
                {"formula_points", T::integer, "500", "chart points for the closed-form/oracle comparison"},
                {"formula_step", T::real, "2e-3", "Richardson oracle step for the comparison"},
                {"formula_tol", T::real, "1e-5", "relative tolerance of the comparison"},
                {"order_step", T::real, "1e-2", "coarse step of the convergence-order measurement"},
                {"order_min", T::real, "1.8", "minimal observed order under step halving"},
                seed_spec("1")}});
  c.push_back({"calabi", "Remark 1 (psi = 0 gives the Calabi metric)",
               "phi = r^{-2n} is Ricci flat on [r_lo, r_hi]",
               {{"n_values", T::integer_list, "2 3", "complex dimensions"},
                {"r_lo", T::real, "1.05", "inner radius"},
                {"r_hi", T::real, "10", "outer radius"},
                {"samples", T::integer, "500", "closed-form grid"},
                {"oracle_points", T::integer, "25", "oracle points"},
                {"oracle_step", T::real, "3e-3", "oracle step relative to r - 1"},
                {"closed_form_tol", T::real, "1e-10", "closed-form tolerance"},
                {"oracle_tol", T::real, "1e-4", "oracle tolerance"},
                seed_spec("1")}});
  c.push_back({"theorem2", "Theorem 2",
               "psi_n construction, phi_n, glued metric with delta_nu, positivity certificate and size bound",
               {{"n", T::integer, "3", "complex dimension"},
                {"R_values", T::real_list, "5 9 16", "radii"},
                {"kappa", T::real, "1", "barrier slope"},
                {"nu", T::text, "auto", "bump height, or auto for the default policy"},
                {"grid_points", T::integer, "10000", "post-hoc psi verification grid"},
                {"certificate_grid", T::integer, "4000", "Ricci certificate grid"},
                {"core_tol", T::real, "1e-8", "tolerance on phi(1) = 1 and phi'(1) = -2n"},
                {"tail_tol", T::real, "1e-9", "sup |phi - r^2/R^2| on [r1, R]"},
                {"limit_tol", T::real, "1e-6", "tolerance on the smoothness limits (0, n)"},
                seed_spec("1")}});
  c.push_back({"example3", "Lemma 4 (Example 3 metric on S^3 x S^3 x S^3)",
               "f profile, degenerate Ricci directions, horizontality, swap isometry, O'Neill quotient scan",
               {{"epsilon", T::real, "0.1", "flat/round cap width of f"},
                {"grid_per_axis", T::integer, "24", "degenerate-direction grid per base axis"},
                {"edge", T::real, "1e-3", "grid inset from the ends of [0, pi/2]"},
                {"margin", T::real, "0.02", "grid points this close to eps or pi/2 - eps are skipped"},
                {"zero_tol", T::real, "1e-10", "Ricci zero tolerance"},
                {"positive_floor", T::real, "1e-4", "min eigenvalue required outside the case regions"},
                {"samples", T::integer, "1000", "O'Neill scan sample count"},
                {"inset", T::real, "0.05", "O'Neill scan box [inset, pi/2 - inset]^3"},
                {"swap_points", T::integer, "64", "samples of the swap isometry defect"},
                seed_spec("42", "seed of the O'Neill and swap samples")}});
  c.push_back({"gao", "Theorem 4 (interpolation with equal 1-jets)",
               "S-cap / CP^2 ball blend: 1-jet match, oracle Ricci scan, identity outside the window",
               {{"epsilon", T::real, "0.1", "cap radius"},
                {"R", T::real, "2.449489742783178", "CP^2 radius (sqrt 6: Einstein constant 1)"},
                {"rho1_factor", T::real, "0.5", "rho1 = factor * eps"},
                {"rho2_factor", T::real, "0.25", "rho2 = factor * eps"},
                {"grid_per_axis", T::integer, "9", "oracle scan grid per axis"},
                {"log_blend", T::boolean, "true", "smoothstep in log r instead of r"},
                {"jet_tol", T::real, "1e-8", "1-jet gap tolerance"},
                {"unit_t2", T::real, "0.03", "cap point of the exact-derivative Ricci check"},
                {"unit_t3", T::real, "0.05", "cap point of the exact-derivative Ricci check"},
                seed_spec("1")}});
  c.push_back({"full", "Theorem 2, Lemma 4 and Theorem 4 combined (Z_2 blow-up)",
               "every scenario above with its own section, then the resolved-block O'Neill scan",
               {{"epsilon", T::real, "0.1", "f-profile and cap width"},
                {"R_blow", T::real, "0", "radius of the n = 2 glued metric, 0 picks the default"},
                {"kappa", T::real, "1", "barrier slope of the glued metric"},
                {"samples", T::integer, "1000", "resolved-block scan samples"},
                {"core_samples", T::integer, "64", "samples on the core r = 1 + core_offset"},
                {"core_offset", T::real, "1e-6", "distance of the core samples from r = 1"},
                {"t1_inset", T::real, "0.05", "t1 range [inset, pi/2 - inset]"},
                {"theta_inset", T::real, "0.05", "theta range [inset, pi - inset]"},
                seed_spec("1", "seed of the resolved-block samples")}});
  return c;
}

using Runner = void (*)(const Params&, RunReport&);

Runner runner_for(const std::string& name) {
  if (name == "lemma1") return detail::run_lemma1;
  if (name == "lemma2") return detail::run_lemma2;
  if (name == "einstein") return detail::run_einstein;
  if (name == "calabi") return detail::run_calabi;
  if (name == "theorem2") return detail::run_theorem2;
  if (name == "example3") return detail::run_example3;
  if (name == "gao") return detail::run_gao;
  return nullptr;
}

Params section_params(const ScenarioInfo& info, const ScenarioConfig& cfg) {
  const auto section = cfg.config.get_child_optional(info.name);
  bool (*extra)(const std::string&) =
      (info.name == "lemma1" || info.name == "lemma2") ? detail::weight_row_key : nullptr;
  Params p(info.params, section ? *section : boost::property_tree::ptree{}, extra);
  if (cfg.seed) p.set("seed", std::to_string(*cfg.seed));
  return p;
}

void run_one(const ScenarioInfo& info, const Params& p, RunReport& r) {
  Runner run = runner_for(info.name);
  try {
    run(p, r);
  } catch (const ConfigError&) {
    throw;
  } catch (const DomainError&) {
    throw;
  } catch (const Error& e) {
    r.failure(info.name + "_completed", e.what());
  }
}

void run_full(const ScenarioConfig& cfg, const Params& own, RunReport& r) {
  // validate every section before doing any work
  std::vector<std::pair<const ScenarioInfo*, Params>> parts;
  for (const auto& info : scenario_catalog())
    if (info.name != "full") parts.emplace_back(&info, section_params(info, cfg));

  nlohmann::json params = nlohmann::json::object();
  params["full"] = own.echo();
  for (const auto& [info, p] : parts) params[info->name] = p.echo();
  r.parameters = params;

  for (const auto& [info, p] : parts) {
    RunReport sub;
    sub.scenario = info->name;
    run_one(*info, p, sub);
    for (auto c : sub.checks) {
      c.name = info->name + "/" + c.name;
      r.checks.push_back(std::move(c));
    }
    r.certificates[info->name] = sub.certificates;
    r.profiles.append(info->name, sub.profiles);
  }
  RunReport blow;
  blow.scenario = "blowup";
  try {
    detail::run_blowup(own, blow);
  } catch (const ConfigError&) {
    throw;
  } catch (const DomainError&) {
    throw;
  } catch (const Error& e) {
    blow.failure("completed", e.what());
  }
  for (auto c : blow.checks) {
    c.name = "blowup/" + c.name;
    r.checks.push_back(std::move(c));
  }
  r.certificates["blowup"] = blow.certificates;
  r.scan = blow.scan;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = build_catalog();
  return catalog;
}

const ScenarioInfo& find_scenario(const std::string& name) {
  for (const auto& s : scenario_catalog())
    if (s.name == name) return s;
  std::string names;
  for (const auto& s : scenario_catalog()) names += (names.empty() ? "" : ", ") + s.name;
  throw ConfigError("unknown scenario '" + name + "'; available: " + names + " (see `list`)");
}

nlohmann::json list_scenarios() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : scenario_catalog()) {
    nlohmann::json e;
    e["name"] = s.name;
    e["anchor"] = s.anchor;
    e["summary"] = s.summary;
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : s.params)
      ps.push_back({{"key", p.key}, {"type", type_name(p.type)}, {"default", p.default_value}, {"help", p.help}});
    e["parameters"] = std::move(ps);
    out.push_back(std::move(e));
  }
  return out;
}

RunReport run_scenario(const ScenarioConfig& cfg) {
  const ScenarioInfo& info = find_scenario(cfg.scenario);
  const Params own = section_params(info, cfg);
  RunReport r;
  r.scenario = info.name;
  r.anchor = info.anchor;
  r.parameters = own.echo();
  r.scan = CsvTable{};

  const auto start = std::chrono::steady_clock::now();
  if (info.name == "full") {
    r.profiles = CsvTable{};
    run_full(cfg, own, r);
  } else {
    run_one(info, own, r);
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!cfg.out_dir.empty()) write_report(r, cfg.out_dir);
  return r;
}

int exit_code(const RunReport& report) { return report.pass() ? 0 : 1; }

namespace detail {

bool weight_row_key(const std::string& key) {
  static const std::regex row("[uv][1-9][0-9]*");
  return key == "spheres" || std::regex_match(key, row);
}

void add_profile(CsvTable& table, const std::string& name, const RadialProfile& profile, int samples) {
  const Interval d = profile.domain();
  for (int i = 0; i < samples; ++i) {
    const double x = d.lo + d.width() * i / (samples - 1);
    const Jet j = profile(x);
    table.row().add(name).add(x).add(j.value).add(j.d1).add(j.d2);
  }
}

std::string tag(double v) { return format_number(v); }

}  // namespace detail

}  // namespace ricci_lab::tools
