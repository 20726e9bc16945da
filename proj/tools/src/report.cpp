#include "ricci_lab/tools/report.hpp"

#include "ricci_lab/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ricci_lab::tools {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool compare(double m, const std::string& rel, double t) {
  if (rel == "<=") return m <= t;
  if (rel == ">=") return m >= t;
  if (rel == "<") return m < t;
  if (rel == ">") return m > t;
  if (rel == "==") return m == t;
  throw Error("unknown relation " + rel);
}

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? nlohmann::json("nan") : nlohmann::json(v > 0 ? "inf" : "-inf");
  return v;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << content;
  if (!out) throw Error("write failed for " + p.string());
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

CsvTable& CsvTable::row() {
  rows_.emplace_back();
  return *this;
}

CsvTable& CsvTable::add(double v) {
  if (rows_.empty()) row();
  rows_.back().push_back(format_number(v));
  return *this;
}

CsvTable& CsvTable::add(int v) {
  if (rows_.empty()) row();
  rows_.back().push_back(std::to_string(v));
  return *this;
}

CsvTable& CsvTable::add(const std::string& v) {
  if (rows_.empty()) row();
  rows_.back().push_back(csv_escape(v));
  return *this;
}

void CsvTable::append(const std::string& label, const CsvTable& other) {
  if (header_.empty()) {
    header_.push_back("source");
    header_.insert(header_.end(), other.header_.begin(), other.header_.end());
  }
  for (const auto& r : other.rows_) {
    std::vector<std::string> line{csv_escape(label)};
    line.insert(line.end(), r.begin(), r.end());
    rows_.push_back(std::move(line));
  }
}

std::string CsvTable::str() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  if (!header_.empty()) line(header_);
  for (const auto& r : rows_) line(r);
  return os.str();
}

bool RunReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Check& RunReport::check(std::string name, double measured, std::string relation, double threshold,
                        std::string detail) {
  const bool ok = std::isfinite(measured) && compare(measured, relation, threshold);
  checks.push_back({std::move(name), number(measured), relation, number(threshold), ok, std::move(detail)});
  return checks.back();
}

Check& RunReport::verdict(std::string name, double measured, std::string relation, double threshold, bool pass,
                          std::string detail) {
  checks.push_back({std::move(name), number(measured), std::move(relation), number(threshold), pass, std::move(detail)});
  return checks.back();
}

Check& RunReport::check_equal(std::string name, const std::string& measured, const std::string& expected) {
  checks.push_back({std::move(name), measured, "==", expected, measured == expected, {}});
  return checks.back();
}

Check& RunReport::failure(std::string name, const std::string& message) {
  checks.push_back({std::move(name), nullptr, "completed", nullptr, false, message});
  return checks.back();
}

nlohmann::json RunReport::summary() const {
  nlohmann::json j;
  j["scenario"] = scenario;
  j["anchor"] = anchor;
  j["parameters"] = parameters;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["measured"] = c.measured;
    e["relation"] = c.relation;
    e["threshold"] = c.threshold;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  j["certificates"] = certificates;
  j["files"] = files;
  j["pass"] = pass();
  return j;
}

void write_report(RunReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());
  report.files = {"summary.json", "profiles.csv", "scan.csv", "timing.json"};
  write_file(out_dir / "profiles.csv", report.profiles.str());
  write_file(out_dir / "scan.csv", report.scan.str());
  write_file(out_dir / "summary.json", report.summary().dump(2) + "\n");
  nlohmann::json t;
  t["scenario"] = report.scenario;
  t["wall_seconds"] = report.wall_seconds;
  write_file(out_dir / "timing.json", t.dump(2) + "\n");
}

}  // namespace ricci_lab::tools
