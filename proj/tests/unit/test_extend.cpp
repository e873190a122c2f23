#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "shelfchain/doab.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/extend.hpp"
#include "shelfchain/verify.hpp"

namespace sc = shelfchain;
using fixtures::lf;

namespace {

std::multiset<std::string> forms(const sc::Spectrum& s) {
  std::multiset<std::string> out;
  for (const auto& e : s.entries)
    for (std::uint64_t k = 0; k < e.multiplicity; ++k) out.insert(e.eigenvalue.to_string());
  return out;
}

const sc::LinForm kLambda1 = lf({{"1,4", 1}, {"2,4", 1}, {"3,4", 1}, {"", 1}});
const sc::LinForm kLambda2 = lf({{"1,4", 1}, {"2,4", 1}, {"3,4", 1}, {"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}, {"", 1}});

}  // namespace

TEST(Extend, BreakPairs) {
  const auto chain = sc::validate_poset({1, 2, 3, 4}, {{1, 2}, {2, 3}});
  EXPECT_EQ(sc::break_pairs(chain), (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}));
  EXPECT_TRUE(sc::break_pairs(sc::antichain_poset({1, 2, 3})).empty());
  EXPECT_TRUE(sc::break_pairs(fixtures::five_ladder()).empty());
}

TEST(Extend, BreakRelation) {
  const auto chain = sc::chain_poset({1, 2, 3});
  EXPECT_EQ(sc::break_relation(chain, 2, 3), sc::validate_poset({1, 2, 3}, {{1, 2}, {1, 3}}));
  EXPECT_EQ(sc::break_relation(sc::chain_poset({1, 2}), 1, 2), sc::antichain_poset({1, 2}));
  const auto once = sc::break_relation(chain, 2, 3);
  EXPECT_THROW(sc::break_relation(once, 2, 3), sc::Error);
}

TEST(Extend, ChainCompletion) {
  const auto v = sc::chain_completion(sc::validate_poset({1, 2, 3}, {{1, 2}, {1, 3}}));
  EXPECT_EQ(v.forest, sc::chain_poset({1, 2, 3}));
  EXPECT_EQ(v.breaks, (std::vector<std::pair<int, int>>{{2, 3}}));

  const auto forest = sc::validate_poset({1, 2, 3}, {{1, 2}});
  EXPECT_EQ(sc::chain_completion(forest).forest, forest);
  EXPECT_TRUE(sc::chain_completion(forest).breaks.empty());

  const auto ladder = sc::chain_completion(fixtures::five_ladder());
  EXPECT_EQ(ladder.forest, sc::chain_poset({1, 2, 3, 4, 5}));
  EXPECT_EQ(ladder.breaks, (std::vector<std::pair<int, int>>{{1, 2}, {4, 5}}));
  auto p = ladder.forest;
  for (const auto& [a, b] : ladder.breaks) p = sc::break_relation(p, a, b);
  EXPECT_EQ(p, fixtures::five_ladder());
}

TEST(Extend, ClassifyPairs) {
  const auto t = fixtures::chain_pair();
  const sc::BreakPair pair{t.node_index("5"), 2, 3};
  EXPECT_EQ(sc::classify_pair(kLambda1, t, pair), sc::PairClass::PropertyA);
  EXPECT_EQ(sc::classify_pair(kLambda2, t, pair), sc::PairClass::PropertyA);
  EXPECT_EQ(sc::classify_pair(sc::LinForm{}, t, pair), sc::PairClass::PropertyA);
  EXPECT_EQ(sc::to_string(sc::PairClass::PropertyB), "B");
}

TEST(Extend, ExtendsChainExample) {
  const auto t = fixtures::chain_pair();
  const auto ext = sc::extend_spectrum(sc::forest_spectrum(t), t, {t.node_index("5"), 2, 3});
  const std::multiset<std::string> want{kLambda1.to_string(), lf({{"1,4", -1}, {"", 1}}).to_string(),
                                        kLambda2.to_string(),
                                        lf({{"4", 1}, {"", 1}, {"1", -1}, {"1,4", -1}}).to_string()};
  EXPECT_EQ(forms(ext), want);
  EXPECT_EQ(ext.dimension, 4u);
}

TEST(Extend, LadderSpectrum) {
  const auto s = sc::ladder_spectrum(fixtures::ladder_pair());
  const std::multiset<std::string> want{kLambda1.to_string(), lf({{"1,4", -1}, {"", 1}}).to_string(),
                                        kLambda2.to_string(),
                                        lf({{"1", -1}, {"1,4", -1}, {"4", 1}, {"", 1}}).to_string()};
  EXPECT_EQ(forms(s), want);
  EXPECT_EQ(s.multiset(), sc::doab_spectrum(fixtures::ladder_pair()).multiset());
}

TEST(Extend, LadderOnForestIsForest) {
  const auto t = fixtures::forest_pair();
  EXPECT_EQ(sc::ladder_spectrum(t).multiset(), sc::forest_spectrum(t).multiset());
}

TEST(Extend, LadderShelfPassesOracle) {
  const auto t = fixtures::single_shelf(fixtures::five_ladder());
  const auto s = sc::ladder_spectrum(t);
  EXPECT_EQ(s.total_multiplicity(), 4u);
  EXPECT_TRUE(sc::verify_spectrum(t, s, sc::standard_weights(t)).pass());
}

TEST(Extend, DegenerateSplitMerges) {
  // Breaking at a shelf the forms never see leaves both children equal.
  sc::TreeSpec spec;
  spec.root = "9";
  spec.children = {{"9", {}}};
  spec.leaf_posets.emplace("9", sc::chain_poset({1, 2}));
  const auto t = sc::load_tree(spec);
  sc::Spectrum s;
  s.entries.push_back({lf({{"", 1}}), 1, "x"});
  s.dimension = 1;
  const auto ext = sc::extend_spectrum(s, t, {0, 1, 2});
  ASSERT_EQ(ext.entries.size(), 1u);
  EXPECT_EQ(ext.entries[0].multiplicity, 2u);
  EXPECT_EQ(ext.dimension, 2u);
}

TEST(Extend, BreakPlanReachesTarget) {
  const auto t = fixtures::single_shelf(fixtures::five_ladder());
  const auto plan = sc::break_plan(t);
  const auto trees = sc::plan_trees(plan);
  ASSERT_EQ(trees.size(), plan.breaks.size() + 1);
  EXPECT_EQ(trees.back().node(0).poset, fixtures::five_ladder());
  for (std::size_t i = 0; i < plan.breaks.size(); ++i) EXPECT_TRUE(sc::cross_check_dab(trees[i], plan.breaks[i]));
}
