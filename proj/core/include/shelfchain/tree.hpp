#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shelfchain/poset.hpp"

namespace shelfchain {

/// Raw description of a tree before validation: inner-node children lists
/// plus one leaf poset per childless inner node.
struct TreeSpec {
  std::string root;
  std::map<std::string, std::vector<std::string>> children;
  std::map<std::string, Poset> leaf_posets;
};

/// Compares identifiers numerically when both are digit strings.
bool natural_less(std::string_view a, std::string_view b);

/// A set of leaves, ordered by size and then lexicographically.
struct LeafSet {
  std::vector<int> members;  // sorted ascending

  LeafSet() = default;
  explicit LeafSet(std::vector<int> labels);

  bool empty() const noexcept { return members.empty(); }
  bool contains(int label) const;
  /// Comma-joined labels; empty string for the empty set.
  std::string key() const;

  friend bool operator==(const LeafSet&, const LeafSet&) = default;
  friend std::strong_ordering operator<=>(const LeafSet& a, const LeafSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() <=> b.members.size();
    return a.members <=> b.members;
  }
};

/// Parses an E-key ("1,4", "" for the empty set).
LeafSet parse_leaf_set(std::string_view key);

/// The validated shelf tree. Inner nodes are stored bottom-up: by depth
/// descending, then by identifier, so leaf-parents come first. This order is
/// also the component order of every State.
class ShelfTree {
 public:
  struct Node {
    std::string id;
    int depth = 0;
    std::optional<std::size_t> parent;
    /// Inner children as node indices (empty for leaf-parents).
    std::vector<std::size_t> children;
    bool leaf_parent = false;
    /// Leaf poset, only for leaf-parents.
    Poset poset;
    /// All leaf labels below this node, sorted.
    std::vector<int> leaves;
  };

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& node(std::size_t index) const { return nodes_.at(index); }
  std::size_t node_index(std::string_view id) const;
  std::size_t root() const noexcept { return root_; }
  /// Depth of the leaves.
  int depth() const noexcept { return depth_; }

  std::size_t leaf_parent_count() const noexcept { return leaf_parent_count_; }
  /// Inner nodes that carry a set partition (all non-leaf-parents).
  std::vector<std::size_t> partition_nodes() const;

  std::size_t parent_of_leaf(int label) const;
  const std::vector<int>& all_leaves() const noexcept { return all_leaves_; }

  /// The children of `v` as integer keys: leaf labels for leaf-parents,
  /// node indices otherwise.
  std::vector<int> child_keys(std::size_t v) const;
  /// Display name of a child key of `v`.
  std::string child_name(std::size_t v, int key) const;

  /// Copy with the leaf poset at `v` replaced; the element set must match.
  ShelfTree with_leaf_poset(std::size_t v, Poset poset) const;

  TreeSpec spec() const;

  friend ShelfTree load_tree(const TreeSpec& spec);

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  int depth_ = 0;
  std::size_t leaf_parent_count_ = 0;
  std::map<int, std::size_t> leaf_parent_;
  std::vector<int> all_leaves_;
};

/// Throws UnequalDepth, MissingLeafPoset, DuplicateLeafLabel or InvalidTree.
ShelfTree load_tree(const TreeSpec& spec);

/// Tuple of per-inner-node sequences. Leaf-parent parts hold leaf labels;
/// the other parts hold child node indices.
struct State {
  std::vector<std::vector<int>> parts;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;
};

bool is_valid_state(const ShelfTree& tree, const State& state);

/// "132|4|56": parts joined by '|'; entries concatenated when every entry of
/// the part is a single character, comma-separated otherwise.
std::string format_state(const ShelfTree& tree, const State& state);
/// Inverse of format_state; throws InvalidState.
State parse_state(const ShelfTree& tree, std::string_view text);

/// The product state space in lexicographic order. Because every component
/// list is sorted, the state index is the mixed-radix number formed by the
/// component indices (first component most significant).
class StateSpace {
 public:
  explicit StateSpace(const ShelfTree& tree);

  std::size_t size() const noexcept { return states_.size(); }
  const State& at(std::size_t index) const { return states_.at(index); }
  const std::vector<State>& states() const noexcept { return states_; }

  /// Throws InvalidState for states outside L(T).
  std::size_t index_of(const State& state) const;
  std::optional<std::size_t> find(const State& state) const;

  /// Sorted admissible values of component `v`.
  const std::vector<std::vector<int>>& component_values(std::size_t v) const {
    return values_.at(v);
  }
  std::size_t component_index(std::size_t v, const std::vector<int>& value) const;
  /// Stride of component `v` in the mixed-radix state index.
  std::size_t stride(std::size_t v) const { return strides_.at(v); }

 private:
  std::vector<std::vector<std::vector<int>>> values_;
  std::vector<std::size_t> strides_;
  std::vector<State> states_;
};

StateSpace state_space(const ShelfTree& tree);

/// Product over leaf-parents of |L(P_v)| times product over the other inner
/// nodes of |C_v|!, computed without enumerating.
std::uint64_t state_count(const ShelfTree& tree);

/// Leaf sets with at most one leaf below each leaf-parent, sorted.
std::vector<LeafSet> admissible_sets(const ShelfTree& tree);
bool is_admissible(const ShelfTree& tree, const LeafSet& set);

/// Children of `v` that have a descendant in `set` (as child keys).
std::vector<int> related_children(const ShelfTree& tree, const LeafSet& set, std::size_t v);

using SetPartition = std::vector<std::vector<int>>;

/// All set partitions of `ground` in restricted-growth-string order; blocks
/// are sorted and listed by their first element.
std::vector<SetPartition> set_partitions(const std::vector<int>& ground);

/// One set partition of C_v for each node in partition_nodes(), aligned.
struct InnerPartition {
  std::vector<SetPartition> parts;

  friend bool operator==(const InnerPartition&, const InnerPartition&) = default;
};

std::vector<InnerPartition> inner_partitions(const ShelfTree& tree);

/// True when every block of alpha_v lies inside C_v^E or inside its
/// complement, at every partition-carrying node.
bool alpha_compatible(const ShelfTree& tree, const LeafSet& set, const InnerPartition& alpha);

/// "{56}" for one block, "{5,6}" for two singletons; nodes separated by ' '.
std::string format_partition(const ShelfTree& tree, const InnerPartition& alpha);

}  // namespace shelfchain
