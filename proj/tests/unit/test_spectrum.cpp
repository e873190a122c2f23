#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "shelfchain/doab.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/spectrum.hpp"

namespace sc = shelfchain;
using fixtures::lf;

namespace {

sc::InnerPartition root_partition(std::vector<std::vector<int>> blocks) { return sc::InnerPartition{{blocks}}; }

}  // namespace

TEST(Spectrum, MAlpha) {
  EXPECT_EQ(sc::m_alpha(root_partition({{5}, {6}})), 1u);
  EXPECT_EQ(sc::m_alpha(root_partition({{5, 6}})), 1u);
  EXPECT_EQ(sc::m_alpha(root_partition({{1, 2, 3}})), 2u);
  EXPECT_EQ(sc::m_alpha(root_partition({{1, 2, 3, 4}, {5}})), 6u);
}

TEST(Spectrum, DepthTwoExample) {
  const auto t = fixtures::forest_pair();
  const auto s = sc::forest_spectrum(t);
  ASSERT_EQ(s.entries.size(), 6u);
  std::map<std::string, sc::LinForm> by_label;
  for (const auto& e : s.entries) {
    EXPECT_EQ(e.multiplicity, 1u);
    by_label[e.label] = e.eigenvalue;
  }
  EXPECT_EQ(by_label.at("(123,4; {56})"), lf({{"1,4", 1}, {"2,4", 1}, {"3,4", 1}, {"", 1}}));
  EXPECT_EQ(by_label.at("(123,4; {5,6})"),
            lf({{"1,4", 1}, {"2,4", 1}, {"3,4", 1}, {"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}, {"", 1}}));
  EXPECT_EQ(by_label.at("(2,4; {56})"), lf({{"2,4", 1}, {"", 1}}));
  EXPECT_EQ(by_label.at("(2,4; {5,6})"), lf({{"2,4", 1}, {"2", 1}, {"4", 1}, {"", 1}}));
  EXPECT_EQ(by_label.at("(∅,4; {56})"), lf({{"", 1}}));
  EXPECT_EQ(by_label.at("(∅,4; {5,6})"), lf({{"4", 1}, {"", 1}}));
}

TEST(Spectrum, ChainExample) {
  const auto s = sc::forest_spectrum(fixtures::chain_pair());
  ASSERT_EQ(s.entries.size(), 2u);
  std::set<std::string> forms;
  for (const auto& e : s.entries) forms.insert(e.eigenvalue.to_string());
  EXPECT_TRUE(forms.count(lf({{"1,4", 1}, {"2,4", 1}, {"3,4", 1}, {"", 1}}).to_string()));
}

TEST(Spectrum, KeepZero) {
  const auto t = fixtures::forest_pair();
  const auto all = sc::forest_spectrum(t, {true});
  // Six upsets of P5, two of P6 and two partitions of the root's children.
  EXPECT_EQ(all.entries.size(), 24u);
  EXPECT_EQ(all.total_multiplicity(), 6u);
}

TEST(Spectrum, SingleState) {
  const auto t = fixtures::single_shelf(sc::chain_poset({1, 2, 3}));
  const auto s = sc::forest_spectrum(t);
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].eigenvalue, sc::total_form(t));
  EXPECT_EQ(s.entries[0].multiplicity, 1u);
}

TEST(Spectrum, RejectsNonForest) { EXPECT_THROW(sc::forest_spectrum(fixtures::ladder_pair()), sc::Error); }

TEST(Spectrum, ZeroOneCoefficientsWithEmptySet) {
  for (const auto& t : {fixtures::forest_pair(), fixtures::chain_pair()}) {
    for (const auto& e : sc::forest_spectrum(t).entries) {
      EXPECT_EQ(e.eigenvalue.coeff(sc::LeafSet{}), 1);
      for (const auto& [set, c] : e.eigenvalue.terms()) EXPECT_EQ(c, 1);
    }
  }
}

TEST(Spectrum, DoabAgreesWithForestOnForests) {
  for (const auto& t : {fixtures::forest_pair(), fixtures::chain_pair()}) {
    EXPECT_EQ(sc::doab_spectrum(t).multiset(), sc::forest_spectrum(t).multiset());
  }
}

TEST(Spectrum, DoabExample) {
  const auto t = fixtures::ladder_pair();
  const auto s = sc::doab_spectrum(t, {true, sc::IdempotentChoice::First});
  ASSERT_EQ(s.entries.size(), 6u);
  std::map<std::string, std::uint64_t> mult;
  for (const auto& e : s.entries) mult[e.eigenvalue.to_string()] = e.multiplicity;
  EXPECT_EQ(mult.at(lf({{"1,4", 1}, {"", 1}}).to_string()), 0u);
  EXPECT_EQ(mult.at(lf({{"1,4", 1}, {"1", 1}, {"4", 1}, {"", 1}}).to_string()), 0u);
  EXPECT_EQ(mult.at(lf({{"1,4", -1}, {"", 1}}).to_string()), 1u);
  EXPECT_EQ(mult.at(lf({{"1", -1}, {"1,4", -1}, {"4", 1}, {"", 1}}).to_string()), 1u);
  EXPECT_EQ(s.total_multiplicity(), 4u);
}

TEST(Spectrum, DoabIdempotentChoiceDoesNotMatter) {
  const auto t = fixtures::ladder_pair();
  EXPECT_EQ(sc::doab_spectrum(t, {false, sc::IdempotentChoice::First}).multiset(),
            sc::doab_spectrum(t, {false, sc::IdempotentChoice::Last}).multiset());
}

TEST(Spectrum, DoabFactorizedMultiplicities) {
  const auto t = fixtures::ladder_pair();
  const auto direct = sc::doab_spectrum(t, {true, sc::IdempotentChoice::First});
  const auto factored = sc::doab_factor_multiplicities(t);
  for (const auto& e : direct.entries) {
    ASSERT_TRUE(factored.count(e.label)) << e.label;
    EXPECT_EQ(factored.at(e.label), static_cast<std::int64_t>(e.multiplicity)) << e.label;
  }
}
