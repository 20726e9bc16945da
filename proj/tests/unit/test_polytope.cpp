#include "ricci_lab/errors.hpp"
#include "ricci_lab/polytope.hpp"

#include <gtest/gtest.h>

using namespace ricci_lab;
using namespace ricci_lab::toric;

namespace {

// V - E + F = 2 for a 3-polytope
int euler(const SimplePolytopeCombinatorics& p) {
  return static_cast<int>(p.vertices().size()) - static_cast<int>(p.edges().size()) + p.facet_count();
}

}  // namespace

TEST(Cube, Counts) {
  const auto c = SimplePolytopeCombinatorics::cube(3);
  EXPECT_EQ(c.facet_count(), 6);
  EXPECT_EQ(c.vertices().size(), 8u);
  EXPECT_EQ(c.edges().size(), 12u);
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(moment_angle_dims(c).torus_rank, 3);
  EXPECT_EQ(moment_angle_dims(c).manifold_dimension, 9);
}

TEST(Cuts, VertexCutCounts) {
  const auto q = one_vertex_cut_cube();
  EXPECT_EQ(q.facet_count(), 7);
  EXPECT_EQ(q.vertices().size(), 10u);
  EXPECT_EQ(euler(q), 2);
  EXPECT_NO_THROW(q.validate());
}

TEST(Cuts, EdgeCutCounts) {
  const auto q = skew_edges_cut_cube();
  EXPECT_EQ(q.facet_count(), 8);
  EXPECT_EQ(q.vertices().size(), 12u);
  EXPECT_EQ(euler(q), 2);
  EXPECT_NO_THROW(q.validate());
}

TEST(Cuts, AllVerticesCut) {
  const auto q = all_vertices_cut_cube();
  EXPECT_EQ(q.facet_count(), 14);
  EXPECT_EQ(q.vertices().size(), 24u);
  EXPECT_EQ(euler(q), 2);
}

TEST(MomentAngle, Bookkeeping) {
  EXPECT_EQ(moment_angle_dims(all_vertices_cut_cube()).torus_rank, 11);
  EXPECT_EQ(moment_angle_dims(one_vertex_cut_cube()).torus_rank, 4);
  EXPECT_EQ(moment_angle_dims(skew_edges_cut_cube()).torus_rank, 5);
  EXPECT_EQ(moment_angle_dims(skew_edges_cut_cube()).manifold_dimension, 11);
}

TEST(Faces, StabilizerSubtorus) {
  const auto c = SimplePolytopeCombinatorics::cube(3);
  const FacetSet v = c.facets_by_name({"z-", "x-", "y-"});
  EXPECT_EQ(face_stabilizer_subtorus(c, v).size(), 3u);
  EXPECT_TRUE(c.is_face({}));
  EXPECT_FALSE(c.is_face(c.facets_by_name({"x-", "x+"})));
  EXPECT_THROW(face_stabilizer_subtorus(c, c.facets_by_name({"x-", "x+"})), NotInLatticeError);
}

TEST(Cuts, RejectsNonFaces) {
  const auto c = SimplePolytopeCombinatorics::cube(3);
  EXPECT_THROW(cut_face(c, c.facets_by_name({"x-", "x+"})), NotInLatticeError);
  EXPECT_THROW(cut_face(c, c.facets_by_name({"x-"})), NotInLatticeError);
  EXPECT_THROW(c.facets_by_name({"w+"}), NotInLatticeError);
}

TEST(Validate, CatchesWrongVertexSize) {
  EXPECT_THROW(
      {
        SimplePolytopeCombinatorics bad(2, {"a", "b", "c"}, {{0, 1}, {1, 2}, {0}}, {{0}, {1}, {2}});
        bad.validate();
      },
      Error);
}
