#include <gtest/gtest.h>

#include <set>

#include "motif/csct.hpp"
#include "motif/errors.hpp"
#include "motif/matching.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace motif {
namespace {

using testing::Rng;

TEST(Matching, AgreesWithExhaustiveAndKonig) {
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    const BipartiteGraph b = testing::random_bipartite(rng);
    const MatchingResult r = max_matching_with_cover(b);
    EXPECT_EQ(r.size(), testing::matching_exhaustive(b));
    EXPECT_EQ(r.cover_size(), r.size());
    std::set<std::size_t> ls(r.left_cover.begin(), r.left_cover.end());
    std::set<std::size_t> rs(r.right_cover.begin(), r.right_cover.end());
    for (auto [u, v] : b.edges) EXPECT_TRUE(ls.count(u) || rs.count(v));
    std::set<std::pair<std::size_t, std::size_t>> edges(b.edges.begin(), b.edges.end());
    std::set<std::size_t> used_l, used_r;
    for (auto e : r.matching) {
      EXPECT_TRUE(edges.count(e));
      EXPECT_TRUE(used_l.insert(e.first).second);
      EXPECT_TRUE(used_r.insert(e.second).second);
    }
  }
}

TEST(Matching, Validation) {
  BipartiteGraph b;
  b.left = 1;
  b.right = 1;
  b.edges = {{0, 1}};
  EXPECT_THROW(b.validate(), InputError);
  b.edges = {{0, 0}, {0, 0}};
  EXPECT_THROW(b.validate(), InputError);
}

TEST(Csct, AgreesWithExhaustive) {
  Rng rng(62);
  for (int i = 0; i < 200; ++i) {
    const CsctInstance inst = testing::random_csct(rng);
    const auto sol = solve_csct(inst);
    ASSERT_EQ(sol.has_value(), testing::csct_exhaustive(inst)) << i;
    if (sol) EXPECT_TRUE(is_valid_cover(inst, *sol));
  }
}

TEST(Csct, SmallCases) {
  CsctInstance inst;
  inst.universe = 0;
  EXPECT_TRUE(solve_csct(inst).has_value());  // the empty cover
  inst.universe = 2;
  inst.sets = {{0, 0b01}, {0, 0b10}, {1, 0b11}};
  inst.thresholds = {{0, 1}, {1, 1}};
  auto sol = solve_csct(inst);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->chosen, (std::vector<std::size_t>{2}));
  inst.sets.pop_back();
  inst.thresholds.erase(1);
  EXPECT_FALSE(solve_csct(inst).has_value());  // needs two sets of color 0
  inst.thresholds[0] = 2;
  EXPECT_TRUE(solve_csct(inst).has_value());
}

TEST(Csct, Validation) {
  CsctInstance inst;
  inst.universe = 2;
  inst.sets = {{0, 0b100}};
  inst.thresholds = {{0, 1}};
  EXPECT_THROW(solve_csct(inst), InputError);
  inst.sets = {{1, 0b1}};
  EXPECT_THROW(solve_csct(inst), InputError);
  inst.sets = {{0, 0b1}};
  inst.thresholds = {{0, 0}};
  EXPECT_THROW(solve_csct(inst), InputError);
  inst.universe = 40;
  EXPECT_THROW(solve_csct(inst), CapacityError);
}

}  // namespace
}  // namespace motif
