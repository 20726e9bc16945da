#include "ricci_lab/errors.hpp"
#include "ricci_lab/toric.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace ricci_lab;
using namespace ricci_lab::toric;

namespace {

std::vector<std::string> names(const std::vector<StratumReport>& strata) {
  std::vector<std::string> out;
  for (const auto& s : strata) out.push_back(s.stratum.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Groups, ToString) {
  EXPECT_EQ((FiniteAbelianGroup{{}, 0}).to_string(), "1");
  EXPECT_EQ((FiniteAbelianGroup{{2}, 0}).to_string(), "Z_2");
  EXPECT_EQ((FiniteAbelianGroup{{2, 6}, 1}).to_string(), "Z_2 × Z_6 × T^1");
  EXPECT_EQ((FiniteAbelianGroup{{2, 6}, 0}).order(), 12);
}

TEST(TorusPoints, CanonicalReduction) {
  const TorusPoint p = TorusPoint::canonical({2, -1, 4}, 4);
  EXPECT_EQ(p.to_string(), "(1/2, 3/4, 0)");
  EXPECT_TRUE((p + p + p + p).is_identity());
  EXPECT_EQ(TorusPoint::canonical({0, 1, 1}, 2).roots_of_unity(), "(1, -1, -1)");
}

TEST(Kernel, CyclicKernel) {
  // theta -> 3 theta on T^1
  EXPECT_EQ(torus_kernel(IntegerMatrix{{3}}).to_string(), "Z_3");
  EXPECT_EQ(kernel_elements(IntegerMatrix{{3}}).size(), 3u);
  EXPECT_EQ(torus_kernel(IntegerMatrix{{1, 1}}).to_string(), "T^1");
  EXPECT_THROW(kernel_elements(IntegerMatrix{{1, 1}}), DomainError);
}

TEST(VertexCut, SingleZ3Stratum) {
  const auto strata = nontrivial_strata(vertex_cut_action());
  ASSERT_EQ(strata.size(), 1u);
  EXPECT_EQ(strata[0].stratum.to_string(), "v1=v2=v3=0");
  EXPECT_EQ(strata[0].stabilizer.to_string(), "Z_3");
  const auto e = stratum_stabilizer_elements(vertex_cut_action(), strata[0].stratum);
  EXPECT_EQ(e.size(), 3u);
}

TEST(EdgeCut, Z2StrataOverF1AndF2) {
  const auto strata = nontrivial_strata(edge_cut_action());
  EXPECT_EQ(names(strata), (std::vector<std::string>{"u1=u2=0", "u1=u2=u3=0", "u1=u2=v3=0", "u1=v2=v3=0",
                                                     "v1=v2=v3=0", "v2=v3=0"}));
  for (const auto& s : strata) EXPECT_EQ(s.stabilizer.to_string(), "Z_2");
  auto e = stratum_stabilizer_elements(edge_cut_action(), strata.front().stratum);
  std::sort(e.begin(), e.end());
  EXPECT_TRUE(e[0].is_identity());
}

TEST(Freeness, ScanCoversAllStrata) {
  EXPECT_EQ(freeness_scan(edge_cut_action()).size(), 27u);
  EXPECT_FALSE(acts_freely(edge_cut_action()));
  EXPECT_TRUE(acts_freely(hopf_diagonal_action(3)));
}

TEST(BruteForce, AgreesOnPresets) {
  for (const auto& a : {vertex_cut_action(), edge_cut_action(), hopf_diagonal_action(2)})
    for (const auto& s : freeness_scan(a)) {
      const BruteForceStabilizer bf = brute_force_stabilizer(a, s.stratum, 6);
      ASSERT_TRUE(bf.determinate);
      EXPECT_EQ(bf.group, s.stabilizer) << s.stratum.to_string();
    }
}

TEST(BruteForceProperty, RandomWeightSystems) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> w(-2, 2);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    IntegerMatrix m(4, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = w(rng);
    const TorusWeightSystem a(m);
    for (const auto& s : freeness_scan(a)) {
      if (!s.stabilizer.finite()) continue;
      // orders up to 6 cover every group whose exponent divides a number <= 6
      const Integer order = s.stabilizer.order();
      if (order > 6) continue;
      const BruteForceStabilizer bf = brute_force_stabilizer(a, s.stratum, 6);
      ASSERT_TRUE(bf.determinate);
      ASSERT_EQ(bf.group, s.stabilizer) << m.to_string() << " " << s.stratum.to_string();
      ASSERT_EQ(group_from_elements(bf.elements), s.stabilizer);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(WeightSystem, RejectsOddRowCount) {
  EXPECT_THROW(TorusWeightSystem(IntegerMatrix{{1}, {1}, {1}}), Error);
}
