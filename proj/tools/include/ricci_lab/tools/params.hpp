#pragma once

#include <boost/property_tree/ptree.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ricci_lab::tools {

enum class ParamType { integer, seed, real, boolean, text, real_list, integer_list };

std::string type_name(ParamType t);

struct ParamSpec {
  std::string key;
  ParamType type;
  std::string default_value;
  std::string help;
};

// Flat key = value parameters of one scenario section, checked against a schema.
class Params {
 public:
  Params() = default;
  // extra_key accepts keys outside the schema (weight rows); unknown keys throw ConfigError.
  Params(const std::vector<ParamSpec>& schema, const boost::property_tree::ptree& section,
         bool (*extra_key)(const std::string&) = nullptr);

  int integer(const std::string& key) const;
  std::uint64_t seed(const std::string& key) const;
  double real(const std::string& key) const;
  bool boolean(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;
  std::vector<int> integers(const std::string& key) const;
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  // Keys accepted through extra_key, verbatim.
  const std::map<std::string, std::string>& extras() const { return extras_; }

  // Typed echo in key order.
  nlohmann::json echo() const;

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, ParamType> types_;
  std::map<std::string, std::string> extras_;
};

}  // namespace ricci_lab::tools
