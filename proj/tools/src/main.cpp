#include "ricci_lab/errors.hpp"
#include "ricci_lab/toric_config.hpp"
#include "ricci_lab/tools/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace rt = ricci_lab::tools;

int main(int argc, char** argv) {
  CLI::App app{"ricci-lab: reproduce the toric and Ricci-curvature checks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one scenario and write its report");
  std::string scenario, config_path, out_dir = "out";
  std::uint64_t seed = 0;
  run->add_option("scenario", scenario, "scenario name (see list)")->required();
  run->add_option("--config", config_path, "INI file with one section per scenario");
  run->add_option("--out", out_dir, "output directory")->capture_default_str();
  auto* seed_opt = run->add_option("--seed", seed, "override the seed of every section");

  auto* list = app.add_subcommand("list", "print the scenario catalog");
  bool as_json = false;
  list->add_flag("--json", as_json, "catalog with parameter schemas as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list->parsed()) {
    if (as_json) {
      std::cout << rt::list_scenarios().dump(2) << "\n";
    } else {
      for (const auto& s : rt::scenario_catalog()) {
        std::cout << s.name << "  [" << s.anchor << "]\n    " << s.summary << "\n";
        for (const auto& p : s.params)
          std::cout << "      " << p.key << " (" << rt::type_name(p.type) << ", default " << p.default_value
                    << "): " << p.help << "\n";
      }
    }
    return 0;
  }

  rt::ScenarioConfig cfg;
  try {
    cfg.scenario = rt::find_scenario(scenario).name;
    if (!config_path.empty()) cfg.config = ricci_lab::toric::read_ini_file(config_path);
    cfg.out_dir = out_dir;
    if (*seed_opt) cfg.seed = seed;
    const rt::RunReport report = rt::run_scenario(cfg);
    for (const auto& c : report.checks)
      if (!c.pass) std::cerr << "FAIL " << c.name << ": measured " << c.measured.dump() << " " << c.relation << " "
                             << c.threshold.dump() << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    std::cout << report.scenario << ": " << (report.pass() ? "pass" : "FAIL") << " (" << report.checks.size()
              << " checks), report in " << cfg.out_dir.string() << "\n";
    return rt::exit_code(report);
  } catch (const ricci_lab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ricci_lab::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
