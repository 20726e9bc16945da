#include "ricci_lab/polytope.hpp"

#include "ricci_lab/errors.hpp"

#include <algorithm>
#include <set>

namespace ricci_lab::toric {

namespace {

FacetSet sorted(FacetSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const FacetSet& big, const FacetSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string describe(const FacetSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

SimplePolytopeCombinatorics::SimplePolytopeCombinatorics(int dimension, std::vector<std::string> facet_names,
                                                         std::vector<FacetSet> vertices,
                                                         std::vector<FacetSet> edges)
    : dimension_(dimension), facet_names_(std::move(facet_names)) {
  for (auto& v : vertices) vertices_.push_back(sorted(std::move(v)));
  for (auto& e : edges) edges_.push_back(sorted(std::move(e)));
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
  validate();
}

SimplePolytopeCombinatorics SimplePolytopeCombinatorics::cube(int dimension) {
  if (dimension < 1) throw DomainError("cube dimension must be positive");
  // facet 2i is {x_i = 0}, facet 2i+1 is {x_i = 1}
  std::vector<std::string> names;
  const char axes[] = "xyzwuv";
  for (int i = 0; i < dimension; ++i) {
    std::string axis = i < 6 ? std::string(1, axes[i]) : "x" + std::to_string(i);
    names.push_back(axis + "-");
    names.push_back(axis + "+");
  }
  std::vector<FacetSet> vertices;
  for (int mask = 0; mask < (1 << dimension); ++mask) {
    FacetSet v;
    for (int i = 0; i < dimension; ++i) v.push_back(2 * i + ((mask >> i) & 1));
    vertices.push_back(v);
  }
  std::vector<FacetSet> edges;
  for (int free_axis = 0; free_axis < dimension; ++free_axis)
    for (int mask = 0; mask < (1 << dimension); ++mask) {
      if ((mask >> free_axis) & 1) continue;
      FacetSet e;
      for (int i = 0; i < dimension; ++i)
        if (i != free_axis) e.push_back(2 * i + ((mask >> i) & 1));
      edges.push_back(e);
    }
  return SimplePolytopeCombinatorics(dimension, names, vertices, edges);
}

bool SimplePolytopeCombinatorics::is_face(const FacetSet& face) const {
  FacetSet f = sorted(face);
  if (f.empty()) return true;
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const FacetSet& v) { return contains(v, f); });
}

FacetSet SimplePolytopeCombinatorics::facets_by_name(const std::vector<std::string>& names) const {
  FacetSet out;
  for (const auto& name : names) {
    auto it = std::find(facet_names_.begin(), facet_names_.end(), name);
    if (it == facet_names_.end()) throw NotInLatticeError("unknown facet '" + name + "'");
    out.push_back(static_cast<int>(it - facet_names_.begin()));
  }
  return sorted(out);
}

void SimplePolytopeCombinatorics::validate() const {
  const int n = dimension_;
  const int m = facet_count();
  if (n < 1 || m < n + 1) throw Error("polytope needs at least n+1 facets");
  std::set<int> used;
  for (const auto& v : vertices_) {
    if (static_cast<int>(v.size()) != n)
      throw Error("vertex " + describe(v) + " is not in exactly " + std::to_string(n) + " facets");
    for (int f : v) {
      if (f < 0 || f >= m) throw Error("vertex " + describe(v) + " references an unknown facet");
      used.insert(f);
    }
  }
  if (static_cast<int>(used.size()) != m) throw Error("some facet contains no vertex");
  for (const auto& e : edges_) {
    if (static_cast<int>(e.size()) != n - 1) throw Error("edge " + describe(e) + " has the wrong facet count");
    int ends = 0;
    for (const auto& v : vertices_)
      if (contains(v, e)) ++ends;
    if (ends != 2) throw Error("edge " + describe(e) + " does not have two end vertices");
  }
  for (const auto& v : vertices_) {
    int degree = 0;
    for (const auto& e : edges_)
      if (contains(v, e)) ++degree;
    if (degree != n) throw Error("vertex " + describe(v) + " does not meet exactly n edges");
  }
}

SimplePolytopeCombinatorics cut_face(const SimplePolytopeCombinatorics& p, const FacetSet& face,
                                     std::string new_facet_name) {
  const int n = p.dimension();
  const FacetSet s = sorted(face);
  if (s.size() < 2 || !p.is_face(s))
    throw NotInLatticeError("cannot cut " + describe(s) + ": not a proper face of codimension >= 2");
  if (static_cast<int>(s.size()) > n) throw NotInLatticeError("face " + describe(s) + " is not in the lattice");

  const int fresh = p.facet_count();
  std::vector<std::string> names = p.facet_names();
  names.push_back(new_facet_name.empty() ? "cut" + std::to_string(fresh) : std::move(new_facet_name));

  std::set<FacetSet> vertices;
  std::set<FacetSet> edges;
  std::vector<FacetSet> removed;
  for (const auto& v : p.vertices()) {
    if (!contains(v, s)) {
      vertices.insert(v);
      continue;
    }
    removed.push_back(v);
    // each removed vertex v yields one new vertex per facet of the cut face
    for (int f : s) {
      FacetSet w;
      for (int g : v)
        if (g != f) w.push_back(g);
      w.push_back(fresh);
      vertices.insert(sorted(w));
    }
  }
  for (const auto& e : p.edges())
    if (!contains(e, s)) edges.insert(e);
  // Edges lying on the new facet: (n-2)-subsets T of a removed vertex, T not ⊇ S, plus the new facet.
  for (const auto& v : removed) {
    std::vector<FacetSet> subsets{{}};
    for (int g : v) {
      std::vector<FacetSet> grown;
      for (const auto& sub : subsets) {
        grown.push_back(sub);
        FacetSet with = sub;
        with.push_back(g);
        grown.push_back(with);
      }
      subsets = std::move(grown);
    }
    for (auto& t : subsets) {
      if (static_cast<int>(t.size()) != n - 2 || contains(sorted(t), s)) continue;
      FacetSet e = t;
      e.push_back(fresh);
      FacetSet es = sorted(e);
      // keep only edges whose two endpoints exist
      int ends = 0;
      for (const auto& w : vertices)
        if (contains(w, es)) ++ends;
      if (ends == 2) edges.insert(es);
    }
  }
  return SimplePolytopeCombinatorics(n, names, {vertices.begin(), vertices.end()}, {edges.begin(), edges.end()});
}

MomentAngleDimensions moment_angle_dims(const SimplePolytopeCombinatorics& p) {
  p.validate();
  return {p.facet_count() + p.dimension(), p.facet_count() - p.dimension()};
}

std::vector<int> face_stabilizer_subtorus(const SimplePolytopeCombinatorics& p, const FacetSet& face) {
  FacetSet f = sorted(face);
  if (!p.is_face(f)) throw NotInLatticeError("face " + describe(f) + " is not in the lattice");
  return f;
}

SimplePolytopeCombinatorics all_vertices_cut_cube() {
  SimplePolytopeCombinatorics p = SimplePolytopeCombinatorics::cube(3);
  const std::vector<FacetSet> corners = p.vertices();
  for (const auto& v : corners) {
    std::string name = "cut";
    for (int f : v) name += "_" + p.facet_names()[f];
    p = cut_face(p, v, name);
  }
  return p;
}

SimplePolytopeCombinatorics one_vertex_cut_cube() {
  SimplePolytopeCombinatorics p = SimplePolytopeCombinatorics::cube(3);
  return cut_face(p, p.facets_by_name({"x-", "y-", "z-"}), "cut_vertex");
}

SimplePolytopeCombinatorics skew_edges_cut_cube() {
  SimplePolytopeCombinatorics p = SimplePolytopeCombinatorics::cube(3);
  p = cut_face(p, p.facets_by_name({"x-", "y-"}), "cut_edge_1");
  return cut_face(p, p.facets_by_name({"x+", "z+"}), "cut_edge_2");
}

}  // namespace ricci_lab::toric
