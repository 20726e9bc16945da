#include "ricci_lab/errors.hpp"
#include "ricci_lab/toric_config.hpp"
#include "ricci_lab/tools/scenario.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ricci_lab;
using namespace ricci_lab::tools;

namespace {

boost::property_tree::ptree ini(const std::string& text) {
  std::istringstream in(text);
  return toric::read_ini(in);
}

RunReport run(const std::string& scenario, const std::string& text = {}) {
  ScenarioConfig cfg;
  cfg.scenario = scenario;
  cfg.config = ini(text);
  return run_scenario(cfg);
}

const Check* find(const RunReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Catalog, EightScenariosWithAnchors) {
  const auto& cat = scenario_catalog();
  ASSERT_EQ(cat.size(), 8u);
  for (const auto& s : cat) {
    EXPECT_FALSE(s.anchor.empty()) << s.name;
    EXPECT_EQ(find_scenario(s.name).name, s.name);
  }
  EXPECT_EQ(find_scenario("lemma1").anchor.rfind("Lemma 1", 0), 0u);
  EXPECT_EQ(list_scenarios().size(), 8u);
}

TEST(Catalog, UnknownScenarioNamesTheAlternatives) {
  try {
    find_scenario("lemma9");
    FAIL() << "no exception";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("available: lemma1"), std::string::npos);
  }
}

TEST(Params, SchemaIsEnforced) {
  const std::vector<ParamSpec> schema{{"a", ParamType::integer, "3", ""},
                                      {"b", ParamType::real_list, "1 2.5", ""},
                                      {"c", ParamType::boolean, "true", ""}};
  const Params p(schema, ini("[s]\na = 7\n").get_child("s"));
  EXPECT_EQ(p.integer("a"), 7);
  EXPECT_EQ(p.reals("b"), (std::vector<double>{1.0, 2.5}));
  EXPECT_TRUE(p.boolean("c"));
  EXPECT_EQ(p.echo()["a"], 7);
  EXPECT_THROW(Params(schema, ini("[s]\nz = 1\n").get_child("s")), ConfigError);
  EXPECT_THROW(Params(schema, ini("[s]\na = 1.5\n").get_child("s")), ConfigError);
  EXPECT_THROW(Params(schema, ini("[s]\nb = 1 two\n").get_child("s")), ConfigError);
  EXPECT_THROW(Params(schema, ini("[s]\nc = maybe\n").get_child("s")), ConfigError);
}

TEST(Scenarios, BadValuesAreConfigErrors) {
  EXPECT_THROW(run("einstein", "[einstein]\nR_values = 1 two\n"), ConfigError);
  EXPECT_THROW(run("lemma1", "[lemma1]\nbogus = 1\n"), ConfigError);
}

TEST(Scenarios, LemmaOnePasses) {
  const RunReport r = run("lemma1");
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(exit_code(r), 0);
  ASSERT_NE(find(r, "stabilizer"), nullptr);
}

TEST(Scenarios, EinsteinSmallCase) {
  const RunReport r = run("einstein", "[einstein]\nn_values = 2\nR_values = 1\nformula_points = 500\n");
  const Check* c = find(r, "n2_R1_closed_form_deviation");
  ASSERT_NE(c, nullptr);
  EXPECT_LE(c->measured.get<double>(), 1e-8);
  EXPECT_TRUE(r.pass());
}

TEST(Scenarios, MissingBumpFailsHonestly) {
  const RunReport r = run("theorem2", "[theorem2]\nR_values = 9\nnu = 0\n");
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(exit_code(r), 1);
  const Check* c = find(r, "R9_certificate");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
}

TEST(Scenarios, SummaryIsDeterministic) {
  const RunReport a = run("lemma2"), b = run("lemma2");
  EXPECT_EQ(a.summary().dump(2), b.summary().dump(2));
  EXPECT_FALSE(a.summary().contains("wall_seconds"));
}

TEST(Scenarios, ReportFilesAreWritten) {
  const auto dir = std::filesystem::temp_directory_path() / "ricci_lab_reports_test";
  std::filesystem::remove_all(dir);
  ScenarioConfig cfg;
  cfg.scenario = "calabi";
  cfg.out_dir = dir;
  const RunReport r = run_scenario(cfg);
  for (const char* f : {"summary.json", "profiles.csv", "scan.csv", "timing.json"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::ifstream in(dir / "summary.json");
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["scenario"], "calabi");
  EXPECT_EQ(j["pass"], r.pass());
  std::filesystem::remove_all(dir);
}

TEST(Scenarios, ShippedConfigsParse) {
  for (const char* f : {"default.ini", "theorem2_nu0.ini", "explicit_weights.ini"})
    EXPECT_NO_THROW(toric::read_ini_file(std::string(RICCI_LAB_CONFIG_DIR) + "/" + f)) << f;
  ScenarioConfig cfg;
  cfg.scenario = "lemma1";
  cfg.config = toric::read_ini_file(std::string(RICCI_LAB_CONFIG_DIR) + "/explicit_weights.ini");
  EXPECT_TRUE(run_scenario(cfg).pass());
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
  CsvTable t({"a", "b"});
  t.row().add(1).add(2.5);
  EXPECT_EQ(t.str(), "a,b\n1,2.5\n");
}
