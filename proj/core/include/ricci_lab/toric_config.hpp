#pragma once

#include "ricci_lab/polytope.hpp"
#include "ricci_lab/toric.hpp"

#include <boost/property_tree/ptree.hpp>

#include <istream>
#include <string>

namespace ricci_lab::toric {

// Weight system from an INI section, either
//   preset = vertex_cut | edge_cut | hopf_diagonal   (with spheres = s for hopf_diagonal)
// or explicit rows
//   spheres = 3
//   u1 = 1 2 0
//   v1 = -1 0 0
//   ...
TorusWeightSystem weight_system_from_section(const boost::property_tree::ptree& section);

// Polytope from an INI section:
//   base = cube            (dimension = 3 by default)
//   cut_vertices = x-,y-,z- ; x+,y+,z+
//   cut_edges = x-,y- ; x+,z+
// or preset = all_vertices_cut | one_vertex_cut | skew_edges_cut
SimplePolytopeCombinatorics polytope_from_section(const boost::property_tree::ptree& section);

boost::property_tree::ptree read_ini(std::istream& in);
boost::property_tree::ptree read_ini_file(const std::string& path);

}  // namespace ricci_lab::toric
