#include "ricci_lab/tools/params.hpp"

#include "ricci_lab/errors.hpp"

#include <boost/algorithm/string/trim.hpp>

#include <charconv>
#include <sstream>

namespace ricci_lab::tools {

namespace {

double parse_real(const std::string& key, const std::string& s) {
  const std::string t = boost::algorithm::trim_copy(s);
  double v = 0.0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty())
    throw ConfigError("parameter '" + key + "': '" + s + "' is not a number");
  return v;
}

int parse_integer(const std::string& key, const std::string& s) {
  const std::string t = boost::algorithm::trim_copy(s);
  int v = 0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty())
    throw ConfigError("parameter '" + key + "': '" + s + "' is not an integer");
  return v;
}

std::uint64_t parse_seed(const std::string& key, const std::string& s) {
  const std::string t = boost::algorithm::trim_copy(s);
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty())
    throw ConfigError("parameter '" + key + "': '" + s + "' is not an unsigned 64-bit seed");
  return v;
}

bool parse_bool(const std::string& key, const std::string& s) {
  const std::string t = boost::algorithm::trim_copy(s);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError("parameter '" + key + "': '" + s + "' is not a boolean");
}

std::vector<std::string> split_list(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

std::string type_name(ParamType t) {
  switch (t) {
    case ParamType::integer: return "int";
    case ParamType::seed: return "uint64";
    case ParamType::real: return "double";
    case ParamType::boolean: return "bool";
    case ParamType::text: return "string";
    case ParamType::real_list: return "list<double>";
    case ParamType::integer_list: return "list<int>";
  }
  return "?";
}

Params::Params(const std::vector<ParamSpec>& schema, const boost::property_tree::ptree& section,
               bool (*extra_key)(const std::string&)) {
  for (const auto& p : schema) {
    values_[p.key] = p.default_value;
    types_[p.key] = p.type;
  }
  for (const auto& [key, node] : section) {
    if (!node.empty()) throw ConfigError("nested value under '" + key + "'");
    const std::string value = boost::algorithm::trim_copy(node.data());
    if (types_.count(key)) {
      values_[key] = value;
    } else if (extra_key && extra_key(key)) {
      extras_[key] = value;
    } else {
      throw ConfigError("unknown parameter '" + key + "'");
    }
  }
  // parse everything once so errors surface before any work
  for (const auto& [key, type] : types_) {
    const std::string& v = values_[key];
    switch (type) {
      case ParamType::integer: parse_integer(key, v); break;
      case ParamType::seed: parse_seed(key, v); break;
      case ParamType::real: parse_real(key, v); break;
      case ParamType::boolean: parse_bool(key, v); break;
      case ParamType::text: break;
      case ParamType::real_list: reals(key); break;
      case ParamType::integer_list: integers(key); break;
    }
  }
}

int Params::integer(const std::string& key) const { return parse_integer(key, text(key)); }
std::uint64_t Params::seed(const std::string& key) const { return parse_seed(key, text(key)); }
double Params::real(const std::string& key) const { return parse_real(key, text(key)); }
bool Params::boolean(const std::string& key) const { return parse_bool(key, text(key)); }

const std::string& Params::text(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing parameter '" + key + "'");
  return it->second;
}

std::vector<double> Params::reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& w : split_list(text(key))) out.push_back(parse_real(key, w));
  return out;
}

std::vector<int> Params::integers(const std::string& key) const {
  std::vector<int> out;
  for (const auto& w : split_list(text(key))) out.push_back(parse_integer(key, w));
  return out;
}

nlohmann::json Params::echo() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, type] : types_) {
    switch (type) {
      case ParamType::integer: j[key] = integer(key); break;
      case ParamType::seed: j[key] = seed(key); break;
      case ParamType::real: j[key] = real(key); break;
      case ParamType::boolean: j[key] = boolean(key); break;
      case ParamType::text: j[key] = text(key); break;
      case ParamType::real_list: j[key] = reals(key); break;
      case ParamType::integer_list: j[key] = integers(key); break;
    }
  }
  for (const auto& [key, value] : extras_) j[key] = value;
  return j;
}

}  // namespace ricci_lab::tools
