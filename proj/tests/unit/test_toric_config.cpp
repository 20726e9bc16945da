#include "ricci_lab/errors.hpp"
#include "ricci_lab/toric_config.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ricci_lab;
using namespace ricci_lab::toric;

namespace {

boost::property_tree::ptree section(const std::string& text) {
  std::istringstream in("[s]\n" + text);
  return read_ini(in).get_child("s");
}

}  // namespace

TEST(WeightConfig, Presets) {
  EXPECT_EQ(weight_system_from_section(section("preset = vertex_cut\n")).weights(), vertex_cut_action().weights());
  EXPECT_EQ(weight_system_from_section(section("preset = edge_cut\n")).weights(), edge_cut_action().weights());
  EXPECT_TRUE(acts_freely(weight_system_from_section(section("preset = hopf_diagonal\nspheres = 2\n"))));
}

TEST(WeightConfig, ExplicitRowsMatchPreset) {
  const auto w = weight_system_from_section(section(
      "spheres = 3\nu1 = 1 2 0\nv1 = -1 0 0\nu2 = 0 1 2\nv2 = 0 -1 0\nu3 = -1 0 1\nv3 = 0 0 -1\n"));
  const auto strata = nontrivial_strata(w);
  ASSERT_EQ(strata.size(), 1u);
  EXPECT_EQ(strata[0].stabilizer.to_string(), "Z_3");
}

TEST(WeightConfig, Errors) {
  EXPECT_THROW(weight_system_from_section(section("preset = nope\n")), ConfigError);
  EXPECT_THROW(weight_system_from_section(section("u1 = 1 0\nv1 = 0 1\n")), ConfigError);
  EXPECT_THROW(weight_system_from_section(section("spheres = 1\nu1 = 1 x\nv1 = 1 0\n")), ConfigError);
  EXPECT_THROW(weight_system_from_section(section("spheres = 1\nu1 = 1 0\n")), ConfigError);
  EXPECT_THROW(weight_system_from_section(section("spheres = 1\nu1 = 1 0\nv1 = 1 0 0\n")), ConfigError);
}

TEST(PolytopeConfig, CutsAndPresets) {
  EXPECT_EQ(polytope_from_section(section("preset = skew_edges_cut\n")).facet_count(), 8);
  const auto p = polytope_from_section(section("cut_vertices = x-,y-,z- ; x+,y+,z+\n"));
  EXPECT_EQ(p.facet_count(), 8);
  EXPECT_EQ(p.vertices().size(), 12u);
  EXPECT_THROW(polytope_from_section(section("cut_edges = x-,x+\n")), ConfigError);
  EXPECT_THROW(polytope_from_section(section("preset = dodecahedron\n")), ConfigError);
}
