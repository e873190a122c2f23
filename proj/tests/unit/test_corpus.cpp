#include <gtest/gtest.h>

#include <set>

#include "shelfchain/corpus.hpp"
#include "shelfchain/poset.hpp"

namespace sc = shelfchain;

TEST(Corpus, RootedForestCounts) {
  // Unlabeled rooted forests on n nodes: 1, 1, 2, 4, 9, 20.
  const std::vector<std::size_t> counts{1, 1, 2, 4, 9, 20};
  std::vector<std::size_t> got(6);
  for (const auto& p : sc::rooted_forests(5)) {
    ASSERT_TRUE(sc::is_rooted_forest(p));
    ++got.at(p.size());
  }
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(got[n], counts[n]) << "n = " << n;
}

TEST(Corpus, LaddersDecompose) {
  const auto ladders = sc::ladder_posets();
  EXPECT_FALSE(ladders.empty());
  for (const auto& p : ladders) {
    const auto d = sc::decompose_forest_ladder(p);
    EXPECT_EQ(sc::reassemble(d), p);
  }
}

TEST(Corpus, InstancesRespectBounds) {
  std::set<std::string> names;
  for (const auto& inst : sc::forest_corpus()) {
    EXPECT_LE(inst.states, 200u);
    EXPECT_EQ(inst.states, sc::state_count(inst.tree));
    EXPECT_GE(inst.tree.depth(), 1);
    EXPECT_LE(inst.tree.depth(), 3);
    EXPECT_TRUE(names.insert(inst.name).second) << inst.name;
  }
  EXPECT_GT(names.size(), 50u);
}
