#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "shelfchain/doab.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/monoid.hpp"

namespace sc = shelfchain;

namespace {

sc::Transformation cycle(std::size_t n) {
  sc::Transformation t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>((i + 1) % n);
  return t;
}

}  // namespace

TEST(Monoid, Basics) {
  const sc::Transformation s{1, 1, 2}, t{2, 0, 1};
  EXPECT_EQ(sc::compose(s, t), (sc::Transformation{2, 1, 1}));
  EXPECT_TRUE(sc::is_idempotent(s));
  EXPECT_EQ(sc::fix_count(sc::identity_transformation(6)), 6u);
  EXPECT_EQ(sc::fix_count(sc::Transformation{2, 2, 2}), 1u);
}

TEST(Monoid, GenerationAndCap) {
  const auto trivial = sc::generate_monoid({sc::identity_transformation(3)});
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(sc::is_r_trivial(trivial));
  const auto j = sc::j_order(trivial);
  ASSERT_EQ(j.classes.size(), 1u);
  EXPECT_EQ(j.classes[0].group.size(), 1u);

  const auto c4 = sc::generate_monoid({cycle(4)});
  EXPECT_EQ(c4.size(), 4u);
  EXPECT_THROW(sc::generate_monoid({cycle(5)}, 3), sc::Error);
  EXPECT_THROW(sc::generate_monoid({cycle(3), cycle(4)}), sc::Error);

  for (std::size_t i = 0; i < c4.size(); ++i) {
    for (std::size_t k = 0; k < c4.size(); ++k) {
      EXPECT_EQ(c4.element(c4.multiply(i, k)), sc::compose(c4.element(i), c4.element(k)));
    }
  }
}

TEST(Monoid, TreeMonoidHasConstantMap) {
  const auto m = sc::tree_monoid(fixtures::forest_pair());
  const bool constant = std::any_of(m.elements().begin(), m.elements().end(), [](const sc::Transformation& t) {
    return std::all_of(t.begin(), t.end(), [&](std::uint32_t x) { return x == t[0]; });
  });
  EXPECT_TRUE(constant);
}

TEST(Monoid, RTriviality) {
  EXPECT_TRUE(sc::is_r_trivial(sc::tree_monoid(fixtures::forest_pair())));
  EXPECT_TRUE(sc::is_r_trivial(sc::tree_monoid(fixtures::chain_pair())));
  EXPECT_FALSE(sc::is_r_trivial(sc::tree_monoid(fixtures::ladder_pair())));
}

TEST(Monoid, ShelfGroupOfOrderTwo) {
  const auto sm = sc::shelf_monoid(sc::validate_poset({1, 2, 3}, {{1, 2}, {1, 3}}));
  ASSERT_EQ(sm.states.size(), 2u);
  // Promotion at 1 swaps the two extensions.
  const auto& swap = sm.monoid.element(sm.hat[0]);
  EXPECT_EQ(swap, (sc::Transformation{1, 0}));
  EXPECT_EQ(sm.j.classes.size(), 2u);
}

TEST(Monoid, ProductJClasses) {
  const auto m = sc::shelf_product_monoid(fixtures::ladder_pair());
  const auto j = sc::j_order(m);
  ASSERT_EQ(j.classes.size(), 2u);
  const auto id = m.identity();
  const auto d1 = m.generator_element(0), d2 = m.generator_element(1), d3 = m.generator_element(2);
  EXPECT_EQ(std::set<std::size_t>(j.classes[j.class_of[id]].members.begin(), j.classes[j.class_of[id]].members.end()),
            (std::set<std::size_t>{id, d1}));
  const auto& lower = j.classes[j.class_of[d2]];
  EXPECT_EQ(std::set<std::size_t>(lower.members.begin(), lower.members.end()), (std::set<std::size_t>{d2, d3}));
  EXPECT_EQ(lower.idempotent, d2);
  EXPECT_EQ(lower.group, std::vector<std::size_t>{d2});
  EXPECT_TRUE(j.order.less(j.class_of[d2], j.class_of[id]));
  EXPECT_TRUE(j.above(d1, j.class_of[d2]));
}

TEST(Monoid, CharactersOfOrderTwo) {
  const auto m = sc::shelf_product_monoid(fixtures::ladder_pair());
  const auto j = sc::j_order(m);
  const auto& top = j.classes[j.class_of[m.identity()]];
  const auto chi = sc::characters(m, top.group);
  ASSERT_EQ(chi.size(), 2u);
  EXPECT_EQ(chi[0].values[0].sign(), 1);
  EXPECT_EQ(chi[0].values[1].sign(), 1);
  EXPECT_EQ(chi[1].values[0].sign(), 1);
  EXPECT_EQ(chi[1].values[1].sign(), -1);
}

TEST(Monoid, CharactersOfTrivialAndCyclicGroups) {
  const auto trivial = sc::generate_monoid({sc::identity_transformation(2)});
  const auto one = sc::characters(trivial, {0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].values[0].num, 0);

  const auto c4 = sc::generate_monoid({cycle(4)});
  const auto g = sc::maximal_subgroup(c4, c4.identity());
  ASSERT_EQ(g.size(), 4u);
  EXPECT_TRUE(sc::is_abelian(c4, g));
  const auto chi = sc::characters(c4, g);
  ASSERT_EQ(chi.size(), 4u);
  std::set<std::pair<std::int64_t, std::int64_t>> values;
  for (const auto& c : chi)
    for (const auto& v : c.values) values.insert({v.num, v.den});
  // Fourth roots of unity: angles 0, 1/4, 1/2 and 3/4 of a turn.
  EXPECT_EQ(values, (std::set<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {1, 4}, {1, 2}, {3, 4}}));
}

TEST(Monoid, NonAbelianGroup) {
  const sc::Transformation swap{1, 0, 2}, rot{1, 2, 0};
  const auto s3 = sc::generate_monoid({swap, rot});
  ASSERT_EQ(s3.size(), 6u);
  const auto g = sc::maximal_subgroup(s3, s3.identity());
  EXPECT_FALSE(sc::is_abelian(s3, g));
  EXPECT_THROW(sc::characters(s3, g), sc::Error);
}

TEST(Monoid, Report) {
  const auto r = sc::monoid_report(sc::tree_monoid(fixtures::ladder_pair()));
  EXPECT_FALSE(r.r_trivial);
  EXPECT_EQ(r.abelian.size(), r.j.classes.size());
  EXPECT_EQ(r.size, 12u);
}
