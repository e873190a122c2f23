#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/tree.hpp"

namespace sc = shelfchain;

namespace {

sc::ErrorKind load_kind(const sc::TreeSpec& spec) {
  try {
    sc::load_tree(spec);
  } catch (const sc::Error& e) {
    return e.kind();
  }
  return sc::ErrorKind::ParseError;
}

}  // namespace

TEST(Tree, LoadsDepthTwo) {
  const auto t = fixtures::forest_pair();
  EXPECT_EQ(t.depth(), 2);
  EXPECT_EQ(t.leaf_parent_count(), 2u);
  EXPECT_EQ(t.node(t.root()).id, "7");
  EXPECT_EQ(t.parent_of_leaf(4), t.node_index("6"));
  EXPECT_EQ(t.all_leaves(), (std::vector<int>{1, 2, 3, 4}));
}

TEST(Tree, SingleShelfHasDepthOne) {
  const auto t = fixtures::single_shelf(fixtures::five_ladder());
  EXPECT_EQ(t.depth(), 1);
  EXPECT_EQ(sc::state_count(t), 4u);
  EXPECT_EQ(sc::inner_partitions(t).size(), 1u);
}

TEST(Tree, ValidationErrors) {
  sc::TreeSpec unequal;
  unequal.root = "9";
  unequal.children = {{"9", {"5", "8"}}, {"8", {"6"}}, {"5", {}}, {"6", {}}};
  unequal.leaf_posets.emplace("5", sc::antichain_poset({1}));
  unequal.leaf_posets.emplace("6", sc::antichain_poset({2}));
  EXPECT_EQ(load_kind(unequal), sc::ErrorKind::UnequalDepth);

  sc::TreeSpec missing;
  missing.root = "7";
  missing.children = {{"7", {"5", "6"}}};
  missing.leaf_posets.emplace("5", sc::antichain_poset({1}));
  EXPECT_EQ(load_kind(missing), sc::ErrorKind::MissingLeafPoset);

  sc::TreeSpec dup;
  dup.root = "7";
  dup.children = {{"7", {"5", "6"}}};
  dup.leaf_posets.emplace("5", sc::antichain_poset({1}));
  dup.leaf_posets.emplace("6", sc::antichain_poset({1}));
  EXPECT_EQ(load_kind(dup), sc::ErrorKind::DuplicateLeafLabel);

  sc::TreeSpec cyclic;
  cyclic.root = "7";
  cyclic.children = {{"7", {"5"}}, {"5", {"7"}}};
  EXPECT_EQ(load_kind(cyclic), sc::ErrorKind::InvalidTree);
}

TEST(Tree, AdmissibleSets) {
  const auto sets = sc::admissible_sets(fixtures::forest_pair());
  std::vector<std::string> keys;
  for (const auto& s : sets) keys.push_back(s.key());
  const std::vector<std::string> want{"", "1", "2", "3", "4", "1,4", "2,4", "3,4"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(sc::admissible_sets(fixtures::single_shelf(sc::antichain_poset({1, 2, 3}))).size(), 4u);

  sc::TreeSpec spec;
  spec.root = "7";
  spec.children = {{"7", {"5", "6"}}};
  spec.leaf_posets.emplace("5", sc::antichain_poset({1}));
  spec.leaf_posets.emplace("6", sc::antichain_poset({2}));
  EXPECT_EQ(sc::admissible_sets(sc::load_tree(spec)).size(), 4u);
  EXPECT_FALSE(sc::is_admissible(fixtures::forest_pair(), sc::parse_leaf_set("1,2")));
}

TEST(Tree, RelatedChildren) {
  const auto t = fixtures::forest_pair();
  const auto v5 = t.node_index("5"), v6 = t.node_index("6"), v7 = t.node_index("7");
  const auto e = sc::parse_leaf_set("1,4");
  EXPECT_EQ(sc::related_children(t, e, v5), std::vector<int>{1});
  EXPECT_EQ(sc::related_children(t, e, v6), std::vector<int>{4});
  EXPECT_EQ(sc::related_children(t, e, v7), (std::vector<int>{static_cast<int>(v5), static_cast<int>(v6)}));
  EXPECT_EQ(sc::related_children(t, sc::parse_leaf_set("1"), v7), std::vector<int>{static_cast<int>(v5)});
  for (auto v : {v5, v6, v7}) EXPECT_TRUE(sc::related_children(t, sc::LeafSet{}, v).empty());
}

TEST(Tree, RelatedChildrenIsAdditive) {
  const auto t = fixtures::forest_pair();
  const auto v7 = t.node_index("7");
  auto merged = sc::related_children(t, sc::parse_leaf_set("2"), v7);
  const auto other = sc::related_children(t, sc::parse_leaf_set("4"), v7);
  merged.insert(merged.end(), other.begin(), other.end());
  std::sort(merged.begin(), merged.end());
  EXPECT_EQ(sc::related_children(t, sc::parse_leaf_set("2,4"), v7), merged);
}

TEST(Tree, StateSpace) {
  const auto t = fixtures::forest_pair();
  const sc::StateSpace space(t);
  std::vector<std::string> names;
  for (const auto& s : space.states()) names.push_back(sc::format_state(t, s));
  const std::vector<std::string> want{"123|4|56", "123|4|65", "132|4|56", "132|4|65", "312|4|56", "312|4|65"};
  EXPECT_EQ(names, want);
  for (std::size_t i = 0; i < space.size(); ++i) EXPECT_EQ(space.index_of(space.at(i)), i);
  EXPECT_EQ(sc::state_count(fixtures::ladder_pair()), 4u);
}

TEST(Tree, StateRoundTripAndValidation) {
  const auto t = fixtures::forest_pair();
  const auto s = sc::parse_state(t, "132|4|65");
  EXPECT_TRUE(sc::is_valid_state(t, s));
  EXPECT_EQ(sc::format_state(t, s), "132|4|65");
  EXPECT_THROW(sc::parse_state(t, "213|4|56"), sc::Error);
  EXPECT_THROW(sc::parse_state(t, "123|4"), sc::Error);
}

TEST(Tree, InnerPartitions) {
  const auto t = fixtures::forest_pair();
  const auto parts = sc::inner_partitions(t);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(sc::format_partition(t, parts[0]), "{56}");
  EXPECT_EQ(sc::format_partition(t, parts[1]), "{5,6}");
  EXPECT_EQ(sc::set_partitions({1, 2, 3}).size(), 5u);
  EXPECT_EQ(sc::set_partitions({1, 2, 3, 4}).size(), 15u);
}

TEST(Tree, AlphaCompatibility) {
  const auto t = fixtures::forest_pair();
  const auto parts = sc::inner_partitions(t);
  const auto& one_block = parts[0];
  EXPECT_FALSE(sc::alpha_compatible(t, sc::parse_leaf_set("1"), one_block));
  EXPECT_TRUE(sc::alpha_compatible(t, sc::parse_leaf_set("1,4"), one_block));
  for (const auto& a : parts) EXPECT_TRUE(sc::alpha_compatible(t, sc::LeafSet{}, a));
  for (const auto& e : sc::admissible_sets(t)) EXPECT_TRUE(sc::alpha_compatible(t, e, parts[1]));
}

TEST(Tree, LeafSetKeys) {
  EXPECT_EQ(sc::parse_leaf_set("").key(), "");
  EXPECT_EQ(sc::parse_leaf_set("4,1").key(), "1,4");
  EXPECT_THROW(sc::parse_leaf_set("1,x"), sc::Error);
  EXPECT_TRUE(sc::natural_less("9", "10"));
  EXPECT_TRUE(sc::natural_less("s1", "s2"));
}
