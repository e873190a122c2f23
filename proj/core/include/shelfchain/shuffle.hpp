#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shelfchain/poset.hpp"
#include "shelfchain/tree.hpp"

namespace shelfchain {

/// An ordered set partition: nonempty disjoint blocks in a fixed order.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

/// Throws InvalidPartition on empty or overlapping blocks.
OrderedSetPartition make_osp(std::vector<std::vector<int>> blocks);

/// All ordered set partitions of `ground`.
std::vector<OrderedSetPartition> ordered_set_partitions(const std::vector<int>& ground);

// Positions below are 0-based: `i` swaps ext[i] and ext[i + 1].

/// Swaps positions i and i+1 when their entries are incomparable.
/// Throws PositionOutOfRange or NotALinearExtension.
std::vector<int> tau(const Poset& poset, std::span<const int> ext, std::size_t i);

/// tau_i, tau_{i+1}, ..., tau_{n-2} applied in that order; i = n-1 is the identity.
std::vector<int> promotion(const Poset& poset, std::span<const int> ext, std::size_t i);

/// Promotion starting at the position of label j. Throws UnknownLabel.
std::vector<int> hat_promotion(const Poset& poset, std::span<const int> ext, int j);

/// Moves block 1 to the back, then block 2, and so on, keeping relative
/// order inside blocks. Throws GroundSetMismatch.
std::vector<int> pop_shuffle(const OrderedSetPartition& b, std::span<const int> seq);

/// Blocks a_i ∩ b_j in lexicographic (i, j) order with empty ones dropped.
OrderedSetPartition osp_compose(const OrderedSetPartition& a, const OrderedSetPartition& b);

/// The move of a leaf set on a tree state. Throws InadmissibleSet.
State apply_move(const ShelfTree& tree, const State& state, const LeafSet& set);

/// apply_move without validating its inputs.
State apply_move_unchecked(const ShelfTree& tree, const State& state, const LeafSet& set);

namespace detail {
// in-place promotion on a valid extension, no validation
void promote_in_place(const Poset& poset, std::vector<int>& ext, std::size_t i);
// (C_v minus related, related) pop shuffle, in place
void pop_related_to_back(std::vector<int>& seq, const std::vector<int>& related);
}  // namespace detail

}  // namespace shelfchain
