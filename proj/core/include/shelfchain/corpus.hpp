#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shelfchain/poset.hpp"
#include "shelfchain/tree.hpp"

namespace shelfchain {

struct CorpusInstance {
  std::string name;
  ShelfTree tree;
  std::uint64_t states = 0;
};

struct CorpusOptions {
  std::size_t max_elements = 5;
  std::uint64_t max_states = 200;
};

/// One naturally labeled representative (labels 1..n) of every rooted forest
/// with 1..max_elements elements, up to isomorphism.
std::vector<Poset> rooted_forests(std::size_t max_elements);

/// Forest (+) ladder posets: a forest of at most two elements under a ladder
/// of rank 1-3 with at least one two-element rank, optionally beside a
/// small extra component.
std::vector<Poset> ladder_posets();

/// Relabels a poset by adding `offset` to every label.
Poset shift_labels(const Poset& p, int offset);

/// Shelf trees of depth 1-3 with one or two shelves carrying the given posets
/// (the second poset is shifted past the first). Shapes with two shelves
/// need `second`.
std::vector<std::pair<std::string, ShelfTree>> tree_shapes(const Poset& first, const Poset* second);

/// Every rooted-forest instance with at most two shelves and at most
/// max_states states.
std::vector<CorpusInstance> forest_corpus(const CorpusOptions& options = {});

/// Instances whose shelves are forest (+) ladder sums (at least one ladder).
std::vector<CorpusInstance> ladder_corpus(const CorpusOptions& options = {});

}  // namespace shelfchain
