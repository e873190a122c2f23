#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/poset.hpp"

namespace sc = shelfchain;
using fixtures::seq;

TEST(Poset, ValidatesLadder) {
  const auto p = fixtures::five_ladder();
  EXPECT_EQ(p.size(), 5u);
  EXPECT_TRUE(p.less(1, 4));
  EXPECT_FALSE(p.comparable(1, 2));
  EXPECT_FALSE(p.comparable(4, 5));
}

TEST(Poset, DropsRedundantCovers) {
  const auto p = sc::validate_poset({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(p.covers().size(), 2u);
  EXPECT_TRUE(p.less(1, 3));
}

TEST(Poset, RejectsBadInput) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const sc::Error& e) {
      return e.kind();
    }
    return sc::ErrorKind::ParseError;
  };
  EXPECT_EQ(kind([] { sc::validate_poset({1, 2}, {{2, 1}}); }), sc::ErrorKind::LabelingError);
  EXPECT_EQ(kind([] { sc::validate_poset({1, 2}, {{1, 3}}); }), sc::ErrorKind::UnknownLabel);
  EXPECT_EQ(kind([] { sc::validate_poset({1, 1}, {}); }), sc::ErrorKind::LabelClash);
  EXPECT_EQ(kind([] { sc::validate_poset({1, 2}, {{1, 2}, {2, 1}}); }), sc::ErrorKind::CycleError);
}

TEST(Poset, LinearExtensionsOfLadder) {
  const auto exts = sc::linear_extensions(fixtures::five_ladder());
  const std::vector<std::vector<int>> want{seq("12345"), seq("12354"), seq("21345"), seq("21354")};
  EXPECT_EQ(exts, want);
}

TEST(Poset, LinearExtensionsOfShelf) {
  const auto p = sc::validate_poset({1, 2, 3}, {{1, 2}});
  const std::vector<std::vector<int>> want{seq("123"), seq("132"), seq("312")};
  EXPECT_EQ(sc::linear_extensions(p), want);
  EXPECT_EQ(sc::count_linear_extensions(p), 3u);
}

TEST(Poset, EmptyPosetHasOneExtension) {
  const auto exts = sc::linear_extensions(sc::Poset{});
  ASSERT_EQ(exts.size(), 1u);
  EXPECT_TRUE(exts[0].empty());
}

TEST(Poset, CountMatchesEnumeration) {
  for (const auto& p : {fixtures::five_ladder(), sc::antichain_poset({1, 2, 3, 4}), sc::chain_poset({1, 2, 3})}) {
    EXPECT_EQ(sc::count_linear_extensions(p), sc::linear_extensions(p).size());
  }
}

TEST(Poset, UpsetLattice) {
  const auto p = sc::validate_poset({1, 2, 3}, {{1, 2}});
  const auto lat = sc::upset_lattice(p);
  const std::vector<std::vector<int>> want{{}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}};
  EXPECT_EQ(lat.upsets, want);
  EXPECT_EQ(sc::upset_lattice(sc::antichain_poset({1, 2})).upsets.size(), 4u);
  EXPECT_EQ(sc::upset_lattice(sc::antichain_poset({4})).upsets.size(), 2u);
}

TEST(Poset, MobiusValues) {
  const auto chain = sc::upset_lattice(sc::chain_poset({1}));
  EXPECT_EQ(chain.mobius(0, 1), -1);
  const auto lat = sc::upset_lattice(sc::validate_poset({1, 2, 3}, {{1, 2}}));
  const std::vector<int> empty, full{1, 2, 3};
  EXPECT_EQ(lat.mobius(lat.index_of(empty), lat.index_of(full)), 0);
  for (std::size_t i = 0; i < lat.upsets.size(); ++i) EXPECT_EQ(lat.mobius(i, i), 1);
}

TEST(Poset, MobiusSumsVanish) {
  const auto lat = sc::upset_lattice(fixtures::five_ladder());
  for (std::size_t x = 0; x < lat.upsets.size(); ++x) {
    for (std::size_t y = 0; y < lat.upsets.size(); ++y) {
      if (x == y || !lat.order.leq(x, y)) continue;
      std::int64_t total = 0;
      for (std::size_t z = 0; z < lat.upsets.size(); ++z) {
        if (lat.order.leq(x, z) && lat.order.leq(z, y)) total += lat.mobius(x, z);
      }
      EXPECT_EQ(total, 0);
    }
  }
}

TEST(Poset, DerangementNumbersOfShelf) {
  const auto p = sc::validate_poset({1, 2, 3}, {{1, 2}});
  const auto lat = sc::upset_lattice(p);
  const auto d = sc::derangement_numbers(p, lat);
  for (std::size_t i = 0; i < lat.upsets.size(); ++i) {
    const auto& u = lat.upsets[i];
    const bool one = u.empty() || u == std::vector<int>{2} || u == std::vector<int>{1, 2, 3};
    EXPECT_EQ(d[i], one ? 1 : 0) << "upset index " << i;
  }
  const auto single = sc::antichain_poset({4});
  const std::vector<int> four{4}, none;
  EXPECT_EQ(sc::derangement_number(single, four), 1);
  EXPECT_EQ(sc::derangement_number(single, none), 0);
}

TEST(Poset, DerangementNumbersOfChain) {
  const auto p = sc::chain_poset({1, 2, 3});
  const auto lat = sc::upset_lattice(p);
  const auto d = sc::derangement_numbers(p, lat);
  for (std::size_t i = 0; i < lat.upsets.size(); ++i) EXPECT_EQ(d[i], lat.upsets[i].size() == 3 ? 1 : 0);
}

TEST(Poset, DerangementNumbersSumToExtensions) {
  for (const auto& p : {fixtures::five_ladder(), sc::antichain_poset({1, 2, 3}),
                        sc::validate_poset({1, 2, 3, 4}, {{1, 2}, {1, 3}, {3, 4}})}) {
    const auto lat = sc::upset_lattice(p);
    std::int64_t total = 0;
    for (auto d : sc::derangement_numbers(p, lat)) total += d;
    EXPECT_EQ(total, static_cast<std::int64_t>(sc::count_linear_extensions(p)));
  }
}

TEST(Poset, Sums) {
  const auto a = sc::antichain_poset({1, 2});
  const auto ladder = sc::poset_sum(sc::poset_sum(a, sc::antichain_poset({3}), sc::SumKind::Ordinal),
                                    sc::antichain_poset({4, 5}), sc::SumKind::Ordinal);
  EXPECT_EQ(ladder, fixtures::five_ladder());
  EXPECT_EQ(sc::poset_sum(sc::antichain_poset({1}), sc::antichain_poset({2}), sc::SumKind::Direct), a);
  EXPECT_EQ(sc::poset_sum(sc::antichain_poset({1}), sc::antichain_poset({2, 3}), sc::SumKind::Ordinal),
            sc::validate_poset({1, 2, 3}, {{1, 2}, {1, 3}}));
}

TEST(Poset, RootedForest) {
  EXPECT_TRUE(sc::is_rooted_forest(sc::validate_poset({1, 2, 3}, {{1, 2}})));
  EXPECT_FALSE(sc::is_rooted_forest(fixtures::five_ladder()));
  EXPECT_FALSE(sc::is_rooted_forest(sc::validate_poset({1, 2, 3}, {{1, 2}, {1, 3}})));
  EXPECT_TRUE(sc::is_rooted_forest(sc::validate_poset({1, 2, 3}, {{1, 3}, {2, 3}})));
}

TEST(Poset, LadderDecomposition) {
  const auto d = sc::decompose_forest_ladder(fixtures::five_ladder());
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_TRUE(d.components[0].forest_part.empty());
  const std::vector<std::vector<int>> ranks{{1, 2}, {3}, {4, 5}};
  EXPECT_EQ(d.components[0].ranks, ranks);
  EXPECT_EQ(sc::reassemble(d), fixtures::five_ladder());

  const auto forest = sc::validate_poset({1, 2, 3, 4}, {{1, 3}, {2, 3}, {3, 4}});
  const auto f = sc::decompose_forest_ladder(forest);
  ASSERT_EQ(f.components.size(), 1u);
  EXPECT_EQ(f.components[0].forest_part, forest);
  EXPECT_TRUE(f.components[0].ranks.empty());
}
