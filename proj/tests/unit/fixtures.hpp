#pragma once

#include <string>
#include <vector>

#include "shelfchain/io.hpp"
#include "shelfchain/linform.hpp"
#include "shelfchain/poset.hpp"
#include "shelfchain/tree.hpp"

namespace fixtures {

namespace sc = shelfchain;

inline sc::Poset five_ladder() { return sc::validate_poset({1, 2, 3, 4, 5}, {{1, 3}, {2, 3}, {3, 4}, {3, 5}}); }

inline sc::ShelfTree two_shelf_tree(std::vector<sc::Cover> covers5) {
  sc::TreeSpec spec;
  spec.root = "7";
  spec.children = {{"7", {"5", "6"}}, {"5", {}}, {"6", {}}};
  spec.leaf_posets.emplace("5", sc::validate_poset({1, 2, 3}, std::move(covers5)));
  spec.leaf_posets.emplace("6", sc::validate_poset({4}, {}));
  return sc::load_tree(spec);
}

// Leaf posets of the depth-2 example: 1 < 2 with 3 isolated, and {4}.
inline sc::ShelfTree forest_pair() { return two_shelf_tree({{1, 2}}); }
// Chain 1 < 2 < 3 plus {4}.
inline sc::ShelfTree chain_pair() { return two_shelf_tree({{1, 2}, {2, 3}}); }
// 1 < 2, 1 < 3 plus {4}.
inline sc::ShelfTree ladder_pair() { return two_shelf_tree({{1, 2}, {1, 3}}); }

inline sc::ShelfTree single_shelf(sc::Poset p, const std::string& id = "9") {
  sc::TreeSpec spec;
  spec.root = id;
  spec.children = {{id, {}}};
  spec.leaf_posets.emplace(id, std::move(p));
  return sc::load_tree(spec);
}

inline sc::LinForm lf(std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
  sc::LinForm f;
  for (const auto& [key, c] : terms) f.add(sc::parse_leaf_set(key), c);
  return f;
}

inline std::vector<int> seq(const std::string& digits) {
  std::vector<int> out;
  for (char c : digits) out.push_back(c - '0');
  return out;
}

}  // namespace fixtures
