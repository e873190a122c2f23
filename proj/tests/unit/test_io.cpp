#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/io.hpp"
#include "shelfchain/matrix.hpp"
#include "shelfchain/spectrum.hpp"

namespace sc = shelfchain;
using nlohmann::json;

TEST(Io, LoadsDataFiles) {
  const auto inst = sc::load_instance(std::string(SHELFCHAIN_DATA_DIR) + "/forest_pair.json");
  EXPECT_EQ(sc::state_count(inst.tree), 6u);
  EXPECT_FALSE(inst.weights.has_value());
  const auto weighted = sc::load_instance(std::string(SHELFCHAIN_DATA_DIR) + "/forest_pair_weighted.json");
  ASSERT_TRUE(weighted.weights.has_value());
  EXPECT_EQ(weighted.weights->at(sc::parse_leaf_set("1,4")), sc::Rational(1, 8));
}

TEST(Io, RoundTrip) {
  const auto t = fixtures::ladder_pair();
  const auto text = sc::instance_to_json(t, sc::uniform_weights(t));
  const auto back = sc::parse_instance(text);
  EXPECT_EQ(sc::instance_to_json(back.tree, back.weights), text);
  EXPECT_EQ(*back.weights, sc::uniform_weights(t));
}

TEST(Io, WeightParsing) {
  const auto t = fixtures::forest_pair();
  const auto w = sc::parse_weights(t, R"({"": "1/2", "1,4": 1, "2": "1/4"})");
  EXPECT_EQ(w.at(sc::LeafSet{}), sc::Rational(1, 2));
  EXPECT_EQ(w.at(sc::parse_leaf_set("1,4")), 1);
  EXPECT_THROW(sc::parse_weights(t, R"({"1,2": "1"})"), sc::Error);
  EXPECT_THROW(sc::parse_weights(t, R"({"1": "x"})"), sc::Error);
  EXPECT_THROW(sc::parse_instance("{"), sc::Error);
}

TEST(Io, SpectrumJson) {
  const auto j = json::parse(sc::spectrum_to_json(sc::forest_spectrum(fixtures::forest_pair())));
  ASSERT_EQ(j.size(), 6u);
  for (const auto& e : j) {
    EXPECT_EQ(e.at("multiplicity"), 1);
    EXPECT_EQ(e.at("eigenvalue").at(""), 1);
    EXPECT_TRUE(e.at("label").is_string());
  }
}

TEST(Io, MatrixJson) {
  const auto t = fixtures::forest_pair();
  const auto m = sc::build_transition_matrix(t);
  const auto j = json::parse(sc::matrix_to_json(t, m));
  EXPECT_EQ(j.at("states").size(), 6u);
  EXPECT_EQ(j.at("entries").size(), 6u);
  const auto k = json::parse(sc::matrix_to_json(t, m, sc::substitute(m, sc::uniform_weights(t))));
  EXPECT_TRUE(k.at("entries")[0][0].is_string());
  EXPECT_EQ(json::parse(sc::states_to_json(t))[2].at("state"), "132|4|56");
}
