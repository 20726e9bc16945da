#include "ricci_lab/polytope.hpp"
#include "ricci_lab/toric.hpp"
#include "ricci_lab/toric_config.hpp"
#include "scenarios.hpp"

#include <algorithm>
#include <set>

namespace ricci_lab::tools::detail {

namespace {

toric::TorusWeightSystem action_of(const Params& p) {
  boost::property_tree::ptree section;
  bool rows = false;
  for (const auto& [key, value] : p.extras()) {
    section.put(key, value);
    rows = rows || key != "spheres";
  }
  if (!rows) section.put("preset", p.text("preset"));
  return toric::weight_system_from_section(section);
}

nlohmann::json weights_json(const toric::TorusWeightSystem& a) {
  nlohmann::json rows = nlohmann::json::array();
  const IntegerMatrix& w = a.weights();
  for (std::size_t i = 0; i < w.rows(); ++i) {
    std::vector<long long> row;
    for (std::size_t j = 0; j < w.cols(); ++j) row.push_back(static_cast<long long>(w(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string join(const std::vector<toric::TorusPoint>& pts, bool roots) {
  std::string s;
  for (const auto& e : pts) s += (s.empty() ? "" : " ") + (roots ? e.roots_of_unity() : e.to_string());
  return s;
}

// Scans every stratum, cross-checks against the brute-force search and fills the scan table.
struct StrataResult {
  std::vector<toric::StratumReport> nontrivial;
  int mismatches = 0;
  int brute_force_checked = 0;
};

StrataResult scan_strata(const toric::TorusWeightSystem& a, int n_max, RunReport& r) {
  if (n_max < 1) throw ConfigError("n_max must be positive");
  StrataResult out;
  r.scan = CsvTable({"stratum", "stabilizer", "elements", "roots_of_unity", "brute_force", "agrees"});
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& s : toric::freeness_scan(a)) {
    const toric::BruteForceStabilizer bf = toric::brute_force_stabilizer(a, s.stratum, n_max);
    std::vector<toric::TorusPoint> elements;
    bool agrees;
    if (s.stabilizer.finite()) {
      elements = toric::stratum_stabilizer_elements(a, s.stratum);
      std::vector<toric::TorusPoint> sorted_bf = bf.elements;
      std::sort(sorted_bf.begin(), sorted_bf.end());
      std::sort(elements.begin(), elements.end());
      agrees = bf.determinate && bf.group == s.stabilizer && sorted_bf == elements;
      ++out.brute_force_checked;
    } else {
      agrees = !bf.determinate;
    }
    if (!agrees) ++out.mismatches;
    if (!s.stabilizer.trivial()) {
      out.nontrivial.push_back(s);
      strata.push_back({{"stratum", s.stratum.to_string()},
                        {"stabilizer", s.stabilizer.to_string()},
                        {"elements", join(elements, false)},
                        {"roots_of_unity", join(elements, true)}});
    }
    r.scan.row()
        .add(s.stratum.to_string())
        .add(s.stabilizer.to_string())
        .add(join(elements, false))
        .add(join(elements, true))
        .add(bf.determinate ? bf.group.to_string() : std::string("positive-dimensional"))
        .add(agrees ? std::string("yes") : std::string("no"));
  }
  r.certificates["weights"] = weights_json(a);
  r.certificates["nontrivial_strata"] = strata;
  r.certificates["strata_scanned"] = static_cast<int>(r.scan.rows());
  return out;
}

void polytope_bookkeeping(RunReport& r) {
  struct Case {
    std::string name;
    toric::SimplePolytopeCombinatorics p;
    int rank;
  };
  const std::vector<Case> cases{{"Q1_all_vertices_cut", toric::all_vertices_cut_cube(), 11},
                                {"Q2_one_vertex_cut", toric::one_vertex_cut_cube(), 4},
                                {"Q3_skew_edges_cut", toric::skew_edges_cut_cube(), 5}};
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cases) {
    c.p.validate();
    const toric::MomentAngleDimensions d = toric::moment_angle_dims(c.p);
    out.push_back({{"polytope", c.name},
                   {"facets", c.p.facet_count()},
                   {"dimension", c.p.dimension()},
                   {"torus_rank", d.torus_rank},
                   {"moment_angle_dimension", d.manifold_dimension}});
    r.check(c.name + "_torus_rank", d.torus_rank, "==", c.rank);
    if (c.name.rfind("Q3", 0) == 0) r.check("Q3_moment_angle_dimension", d.manifold_dimension, "==", 11);
  }
  r.certificates["polytopes"] = out;
}

}  // namespace

void run_lemma1(const Params& p, RunReport& r) {
  const toric::TorusWeightSystem a = action_of(p);
  const StrataResult s = scan_strata(a, p.integer("n_max"), r);
  r.check("single_nontrivial_stratum", static_cast<double>(s.nontrivial.size()), "==", 1);
  const std::string stratum = s.nontrivial.size() == 1 ? s.nontrivial[0].stratum.to_string() : "";
  const std::string group = s.nontrivial.size() == 1 ? s.nontrivial[0].stabilizer.to_string() : "";
  r.check_equal("nontrivial_stratum", stratum, p.text("expected_stratum"));
  r.check_equal("stabilizer", group, p.text("expected_group"));
  r.check("brute_force_mismatches", s.mismatches, "==", 0);
  polytope_bookkeeping(r);
}

void run_lemma2(const Params& p, RunReport& r) {
  const toric::TorusWeightSystem a = action_of(p);
  if (a.spheres() != 3) throw ConfigError("lemma2 expects three spheres");
  const StrataResult s = scan_strata(a, p.integer("n_max"), r);

  // F1 = {v2 = v3 = 0}, F2 = {u1 = u2 = 0}
  using S = toric::SphereState;
  auto on_f1 = [](const toric::VanishingStratum& v) { return v.states[1] == S::v_vanishes && v.states[2] == S::v_vanishes; };
  auto on_f2 = [](const toric::VanishingStratum& v) { return v.states[0] == S::u_vanishes && v.states[1] == S::u_vanishes; };

  std::set<std::string> expected, found;
  for (const auto& st : toric::freeness_scan(a))
    if (on_f1(st.stratum) || on_f2(st.stratum)) expected.insert(st.stratum.to_string());
  int wrong_group = 0, wrong_elements = 0;
  for (const auto& st : s.nontrivial) {
    found.insert(st.stratum.to_string());
    if (st.stabilizer.to_string() != "Z_2") ++wrong_group;
    const std::string want = on_f1(st.stratum) ? "(1, 1, 1) (1, -1, -1)" : "(1, 1, 1) (-1, -1, 1)";
    std::vector<toric::TorusPoint> e = toric::stratum_stabilizer_elements(a, st.stratum);
    std::sort(e.begin(), e.end());
    if (!st.stabilizer.finite() || join(e, true) != want) ++wrong_elements;
  }
  r.check("nontrivial_strata", static_cast<double>(found.size()), "==", static_cast<double>(expected.size()));
  r.check_equal("nontrivial_strata_are_F1_F2", found == expected ? "yes" : "no", "yes");
  r.check("non_Z2_stabilizers", wrong_group, "==", 0);
  r.check("unexpected_elements", wrong_elements, "==", 0, "F1: {(1, +-(1, 1))}, F2: {(+-(1, 1), 1)}");
  r.check("brute_force_mismatches", s.mismatches, "==", 0);
}

}  // namespace ricci_lab::tools::detail
