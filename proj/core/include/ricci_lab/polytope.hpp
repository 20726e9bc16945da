#pragma once

#include <string>
#include <vector>

namespace ricci_lab::toric {

// A face of a simple polytope, named by the sorted set of facets containing it.
using FacetSet = std::vector<int>;

// Combinatorial simple polytope: facets, vertices and edges by facet incidence.
class SimplePolytopeCombinatorics {
 public:
  SimplePolytopeCombinatorics(int dimension, std::vector<std::string> facet_names,
                              std::vector<FacetSet> vertices, std::vector<FacetSet> edges);

  static SimplePolytopeCombinatorics cube(int dimension = 3);

  int dimension() const { return dimension_; }
  int facet_count() const { return static_cast<int>(facet_names_.size()); }
  const std::vector<std::string>& facet_names() const { return facet_names_; }
  const std::vector<FacetSet>& vertices() const { return vertices_; }
  const std::vector<FacetSet>& edges() const { return edges_; }

  // Empty set denotes the polytope itself.
  bool is_face(const FacetSet& face) const;
  FacetSet facets_by_name(const std::vector<std::string>& names) const;

  // Throws Error describing the first violated incidence property.
  void validate() const;

 private:
  int dimension_;
  std::vector<std::string> facet_names_;
  std::vector<FacetSet> vertices_;
  std::vector<FacetSet> edges_;
};

// Truncates a vertex or an edge; the new facet is appended with the given name.
SimplePolytopeCombinatorics cut_face(const SimplePolytopeCombinatorics& p, const FacetSet& face,
                                     std::string new_facet_name = {});

struct MomentAngleDimensions {
  int manifold_dimension;  // m + n
  int torus_rank;          // m - n
};

MomentAngleDimensions moment_angle_dims(const SimplePolytopeCombinatorics& p);

// Facets containing the face: the coordinate subtorus fixing points over it.
std::vector<int> face_stabilizer_subtorus(const SimplePolytopeCombinatorics& p, const FacetSet& face);

// Cube with all vertices cut, one vertex cut, and two skew edges cut.
SimplePolytopeCombinatorics all_vertices_cut_cube();
SimplePolytopeCombinatorics one_vertex_cut_cube();
SimplePolytopeCombinatorics skew_edges_cut_cube();

}  // namespace ricci_lab::toric
