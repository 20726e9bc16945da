#pragma once

#include "ricci_lab/tools/params.hpp"
#include "ricci_lab/tools/report.hpp"

#include <boost/property_tree/ptree.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ricci_lab::tools {

struct ScenarioInfo {
  std::string name;
  std::string anchor;  // the statement the scenario reproduces
  std::string summary;
  std::vector<ParamSpec> params;
};

// lemma1, lemma2, einstein, calabi, theorem2, example3, gao, full.
const std::vector<ScenarioInfo>& scenario_catalog();
// Throws ConfigError naming the available scenarios.
const ScenarioInfo& find_scenario(const std::string& name);
nlohmann::json list_scenarios();

struct ScenarioConfig {
  std::string scenario;
  boost::property_tree::ptree config;  // whole INI file, one section per scenario
  std::filesystem::path out_dir;       // empty: nothing written
  std::optional<std::uint64_t> seed;   // overrides the seed key of every section used
};

// Throws ConfigError (or DomainError) on invalid parameters; module failures and
// violated checks end up in the report.
RunReport run_scenario(const ScenarioConfig& cfg);

// Process exit code of a finished run: 0 when every check passed, 1 otherwise.
int exit_code(const RunReport& report);

}  // namespace ricci_lab::tools
