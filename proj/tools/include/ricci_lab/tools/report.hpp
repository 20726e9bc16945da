#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace ricci_lab::tools {

struct Check {
  std::string name;
  nlohmann::json measured;
  std::string relation;  // "<=", ">=", ">", "<", "==", "completed"
  nlohmann::json threshold;
  bool pass = false;
  std::string detail;
};

// Plain CSV with a fixed header; numbers in shortest round-trip form.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header = {}) : header_(std::move(header)) {}

  CsvTable& row();
  CsvTable& add(double v);
  CsvTable& add(int v);
  CsvTable& add(const std::string& v);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;
  // Rows of another table with the same header, prefixed by a label column.
  void append(const std::string& label, const CsvTable& other);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string format_number(double v);

struct RunReport {
  std::string scenario;
  std::string anchor;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json certificates = nlohmann::json::object();
  CsvTable profiles{{"profile", "x", "value", "d1", "d2"}};
  CsvTable scan;
  std::vector<std::string> files;
  double wall_seconds = 0.0;

  bool pass() const;
  Check& check(std::string name, double measured, std::string relation, double threshold, std::string detail = {});
  // Pass/fail decided by the module that measured it.
  Check& verdict(std::string name, double measured, std::string relation, double threshold, bool pass,
                 std::string detail = {});
  Check& check_equal(std::string name, const std::string& measured, const std::string& expected);
  // Records a module failure as a failed check.
  Check& failure(std::string name, const std::string& message);
  // Everything except wall time; byte-stable for a fixed config and seed.
  nlohmann::json summary() const;
};

// Writes summary.json, profiles.csv, scan.csv and timing.json; fills report.files.
void write_report(RunReport& report, const std::filesystem::path& out_dir);

}  // namespace ricci_lab::tools
