#include <gtest/gtest.h>

#include "boxcube/cube.hpp"
#include "boxcube/generate.hpp"
#include "boxcube/oracle.hpp"
#include "support/brute.hpp"

namespace boxcube {
namespace {

TEST(OracleTest, CubicityExamples) {
  const auto s = cubicity_oracle(star(4), 3);
  ASSERT_TRUE(s.value.has_value());
  EXPECT_EQ(*s.value, 2);
  EXPECT_FALSE(s.exceeded);
  EXPECT_TRUE(verify_oracle_witness(star(4), s));

  const auto k = cubicity_oracle(complete(4), 3);
  EXPECT_EQ(k.value, 0);
  EXPECT_TRUE(k.witness.empty());

  const auto p = cubicity_oracle(path(4), 3);
  EXPECT_EQ(p.value, 1);
  EXPECT_TRUE(verify_oracle_witness(path(4), p));
}

TEST(OracleTest, BoxicityExamples) {
  const auto c = boxicity_oracle(cycle(4), 3);
  EXPECT_EQ(c.value, 2);
  EXPECT_TRUE(verify_oracle_witness(cycle(4), c));
  EXPECT_EQ(boxicity_oracle(star(4), 2).value, 1);
  EXPECT_EQ(boxicity_oracle(complete(3), 2).value, 0);
  EXPECT_EQ(boxicity_oracle(complete_multipartite({2, 2}), 3).value, 2);
}

TEST(OracleTest, StarCubicityMatchesCeilLogOfLeaves) {
  for (int n = 3; n <= 6; ++n) {
    const auto r = cubicity_oracle(star(n), 4);
    ASSERT_TRUE(r.value.has_value());
    EXPECT_EQ(*r.value, ceil_log2(n - 1)) << "n=" << n;
    EXPECT_TRUE(verify_oracle_witness(star(n), r));
  }
}

TEST(OracleTest, ExceededMarker) {
  const auto r = cubicity_oracle(cycle(4), 1);
  EXPECT_TRUE(r.exceeded);
  EXPECT_FALSE(r.value.has_value());
  EXPECT_TRUE(r.witness.empty());
  EXPECT_EQ(cubicity_oracle(cycle(4), 2).value, 2);
  EXPECT_TRUE(boxicity_oracle(cycle(4), 0).exceeded);
}

TEST(OracleTest, Errors) {
  EXPECT_THROW(cubicity_oracle(path(7), 3), SizeLimitError);
  EXPECT_NO_THROW(cubicity_oracle(path(7), 3, 7));
  EXPECT_THROW(boxicity_oracle(path(3), -1), std::invalid_argument);
  EXPECT_THROW(cubicity_oracle(path(12), 3, 20), SizeLimitError);
  EXPECT_THROW(parse_parameter("treewidth"), std::invalid_argument);
}

TEST(OracleTest, SearchIsMonotoneInCap) {
  for (const auto& g : testing::all_graphs(4)) {
    for (auto p : {Parameter::Boxicity, Parameter::Cubicity}) {
      const auto a = run_oracle(p, g, 3);
      const auto b = run_oracle(p, g, 4);
      ASSERT_TRUE(a.value && b.value);
      EXPECT_EQ(*a.value, *b.value);
      EXPECT_EQ(a.witness, b.witness);
    }
  }
}

TEST(OracleTest, BoxicityAtMostCubicityWithVerifiedWitnesses) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : testing::all_graphs(n)) {
      const auto box = boxicity_oracle(g, 4);
      const auto cub = cubicity_oracle(g, 4);
      ASSERT_TRUE(box.value && cub.value);
      EXPECT_LE(*box.value, *cub.value);
      EXPECT_EQ(*box.value == 0, is_complete(g));
      EXPECT_TRUE(verify_oracle_witness(g, box));
      EXPECT_TRUE(verify_oracle_witness(g, cub));
    }
  }
}

TEST(OracleTest, ConstructionNeverBeatsOptimum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto rep = random_interval_rep(n, seed);
    const Graph g = intersection_graph_of_intervals(rep);
    const auto cube = interval_to_cube(rep);
    const auto r = cubicity_oracle(g, 4);
    ASSERT_TRUE(r.value.has_value());
    EXPECT_LE(*r.value, cube.dims());
    EXPECT_LE(cube.dims(), ceil_log2(n));
  }
}

TEST(OracleTest, TamperedWitnessFailsVerification) {
  auto r = boxicity_oracle(cycle(4), 3);
  ASSERT_EQ(r.witness.size(), 2u);
  r.witness.pop_back();
  EXPECT_FALSE(verify_oracle_witness(cycle(4), r));
  r.value = 1;
  EXPECT_FALSE(verify_oracle_witness(cycle(4), r));
}

}  // namespace
}  // namespace boxcube
