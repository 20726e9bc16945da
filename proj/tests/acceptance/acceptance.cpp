// One line per acceptance criterion; nonzero exit if any fails.
#include "ricci_lab/tools/scenario.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace ricci_lab::tools;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

std::map<std::string, RunReport> cache;

const RunReport& report(const std::string& scenario) {
  auto it = cache.find(scenario);
  if (it != cache.end()) return it->second;
  ScenarioConfig cfg;
  cfg.scenario = scenario;
  return cache.emplace(scenario, run_scenario(cfg)).first->second;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// All checks accepted by the filter must pass, and there must be at least one.
Outcome checks(const std::string& scenario, const std::function<bool(const std::string&)>& keep,
               double max_seconds = 0.0) {
  const RunReport& r = report(scenario);
  Outcome o;
  int used = 0;
  std::string failed;
  for (const auto& c : r.checks) {
    if (!keep(c.name)) continue;
    ++used;
    if (!c.pass) {
      o.pass = false;
      failed += (failed.empty() ? "" : ", ") + c.name;
    }
  }
  std::ostringstream note;
  note << used << " checks";
  if (used == 0) o.pass = false;
  if (!failed.empty()) note << "; failed: " << failed;
  if (max_seconds > 0.0) {
    note << "; " << r.wall_seconds << " s (limit " << max_seconds << " s)";
    if (r.wall_seconds >= max_seconds) o.pass = false;
  }
  o.note = note.str();
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const fs::path& root) {
  Outcome o;
  int compared = 0;
  std::string differing;
  for (const auto& info : scenario_catalog()) {
    for (const char* run : {"a", "b"}) {
      ScenarioConfig cfg;
      cfg.scenario = info.name;
      cfg.out_dir = root / run / info.name;
      fs::remove_all(cfg.out_dir);
      run_scenario(cfg);
    }
    const std::string a = slurp(root / "a" / info.name / "summary.json");
    const std::string b = slurp(root / "b" / info.name / "summary.json");
    ++compared;
    if (a.empty() || a != b) {
      o.pass = false;
      differing += (differing.empty() ? "" : ", ") + info.name;
    }
  }
  o.note = std::to_string(compared) + " scenarios run twice" + (differing.empty() ? "" : "; differ: " + differing);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "ricci_lab_acceptance";
  auto any = [](const std::string&) { return true; };
  auto not_bookkeeping = [](const std::string& n) { return !starts_with(n, "Q"); };

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"vertex-cut action: single Z_3 stratum, brute force agrees, < 1 s",
       [&] { return checks("lemma1", not_bookkeeping, 1.0); }},
      {"edge-cut action: Z_2 exactly over F1 and F2 with the stated elements, < 1 s",
       [&] { return checks("lemma2", any, 1.0); }},
      {"moment-angle bookkeeping: ranks 11, 4, 5 and dimension 11",
       [&] { return checks("lemma1", [](const std::string& n) { return starts_with(n, "Q"); }); }},
      {"warped Ricci formulas against the oracle (>= 500 points, order >= 1.8), < 1 min",
       [&] { return checks("einstein", [](const std::string& n) { return starts_with(n, "formula_"); }, 60.0); }},
      {"Fubini-Study profile is Einstein for n in {2, 3}, R in {1, 2, 5}",
       [&] { return checks("einstein", [](const std::string& n) { return starts_with(n, "n"); }); }},
      {"psi = 0 profile is Ricci flat on [1.05, 10]", [&] { return checks("calabi", any); }},
      {"glued profile pipeline for n = 3, R in {5, 9, 16}, < 2 min",
       [&] { return checks("theorem2", any, 120.0); }},
      {"triple-sphere metric: degenerate directions match the two cases and are never horizontal",
       [&] { return checks("example3", [](const std::string& n) { return !starts_with(n, "oneill_"); }); }},
      {"quotient Ricci by the four-term formula is positive on >= 1000 samples",
       [&] { return checks("example3", [](const std::string& n) { return starts_with(n, "oneill_"); }); }},
      {"cap/ball interpolation: 1-jet match, positive Ricci, verbatim outside the window",
       [&] { return checks("gao", any); }},
      {"byte-identical summaries across repeated runs of every scenario", [&] { return determinism(root); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu %s  %s  [%s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
