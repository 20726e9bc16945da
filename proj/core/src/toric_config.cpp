#include "ricci_lab/toric_config.hpp"

#include "ricci_lab/errors.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>

#include <sstream>

namespace ricci_lab::toric {

namespace pt = boost::property_tree;

namespace {

std::vector<long long> parse_row(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::vector<long long> row;
  long long v;
  while (in >> v) row.push_back(v);
  if (!in.eof() || row.empty()) throw ConfigError("cannot parse integer row for '" + key + "': " + text);
  return row;
}

std::vector<std::vector<std::string>> parse_face_list(const std::string& text) {
  std::vector<std::vector<std::string>> faces;
  std::vector<std::string> groups;
  boost::split(groups, text, boost::is_any_of(";"));
  for (auto& g : groups) {
    boost::trim(g);
    if (g.empty()) continue;
    std::vector<std::string> names;
    boost::split(names, g, boost::is_any_of(","));
    for (auto& n : names) boost::trim(n);
    faces.push_back(names);
  }
  return faces;
}

}  // namespace

TorusWeightSystem weight_system_from_section(const pt::ptree& section) {
  if (auto preset = section.get_optional<std::string>("preset")) {
    if (*preset == "vertex_cut") return vertex_cut_action();
    if (*preset == "edge_cut") return edge_cut_action();
    if (*preset == "hopf_diagonal") return hopf_diagonal_action(section.get<std::size_t>("spheres", 3));
    throw ConfigError("unknown action preset '" + *preset + "'");
  }
  auto spheres = section.get_optional<std::size_t>("spheres");
  if (!spheres || *spheres == 0) throw ConfigError("action section needs 'spheres' or 'preset'");
  std::vector<std::vector<long long>> rows;
  std::vector<std::string> names;
  for (std::size_t s = 1; s <= *spheres; ++s)
    for (const char* c : {"u", "v"}) {
      std::string key = c + std::to_string(s);
      auto text = section.get_optional<std::string>(key);
      if (!text) throw ConfigError("missing weight row '" + key + "'");
      rows.push_back(parse_row(*text, key));
      names.push_back(key);
    }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ConfigError("weight rows have different lengths");
  return TorusWeightSystem(IntegerMatrix::from_rows(rows), names);
}

SimplePolytopeCombinatorics polytope_from_section(const pt::ptree& section) {
  if (auto preset = section.get_optional<std::string>("preset")) {
    if (*preset == "all_vertices_cut") return all_vertices_cut_cube();
    if (*preset == "one_vertex_cut") return one_vertex_cut_cube();
    if (*preset == "skew_edges_cut") return skew_edges_cut_cube();
    throw ConfigError("unknown polytope preset '" + *preset + "'");
  }
  const std::string base = section.get<std::string>("base", "cube");
  if (base != "cube") throw ConfigError("unsupported polytope base '" + base + "'");
  SimplePolytopeCombinatorics p = SimplePolytopeCombinatorics::cube(section.get<int>("dimension", 3));
  for (const char* key : {"cut_vertices", "cut_edges"}) {
    auto text = section.get_optional<std::string>(key);
    if (!text) continue;
    for (const auto& names : parse_face_list(*text)) {
      try {
        p = cut_face(p, p.facets_by_name(names), "cut_" + boost::join(names, "_"));
      } catch (const NotInLatticeError& e) {
        throw ConfigError(std::string("invalid face in '") + key + "': " + e.what());
      }
    }
  }
  return p;
}

pt::ptree read_ini(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  return tree;
}

pt::ptree read_ini_file(const std::string& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  return tree;
}

}  // namespace ricci_lab::toric
