#include "shelfchain/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

std::vector<int> sorted_copy(std::span<const int> v) {
  std::vector<int> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ground_of(const OrderedSetPartition& p) {
  std::vector<int> all;
  for (const auto& b : p.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

void require_extension(const Poset& poset, std::span<const int> ext) {
  if (!is_linear_extension(poset, ext)) {
    throw Error(ErrorKind::NotALinearExtension, "sequence is not a linear extension of the poset");
  }
}

}  // namespace

OrderedSetPartition make_osp(std::vector<std::vector<int>> blocks) {
  std::set<int> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (!seen.insert(x).second) {
        throw Error(ErrorKind::InvalidPartition, "element " + std::to_string(x) + " in two blocks");
      }
    }
  }
  return OrderedSetPartition{std::move(blocks)};
}

std::vector<OrderedSetPartition> ordered_set_partitions(const std::vector<int>& ground) {
  std::vector<OrderedSetPartition> out;
  for (const auto& p : set_partitions(ground)) {
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      OrderedSetPartition osp;
      for (auto i : order) osp.blocks.push_back(p[i]);
      out.push_back(std::move(osp));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

namespace detail {

void promote_in_place(const Poset& poset, std::vector<int>& ext, std::size_t i) {
  for (std::size_t k = i; k + 1 < ext.size(); ++k) {
    if (!poset.comparable(ext[k], ext[k + 1])) std::swap(ext[k], ext[k + 1]);
  }
}

void pop_related_to_back(std::vector<int>& seq, const std::vector<int>& related) {
  if (related.empty() || related.size() == seq.size()) return;
  std::stable_partition(seq.begin(), seq.end(), [&](int x) {
    return std::find(related.begin(), related.end(), x) == related.end();
  });
}

}  // namespace detail

std::vector<int> tau(const Poset& poset, std::span<const int> ext, std::size_t i) {
  require_extension(poset, ext);
  if (i + 1 >= ext.size()) {
    throw Error(ErrorKind::PositionOutOfRange,
                "position " + std::to_string(i) + " for a sequence of length " + std::to_string(ext.size()));
  }
  std::vector<int> out(ext.begin(), ext.end());
  if (!poset.comparable(out[i], out[i + 1])) std::swap(out[i], out[i + 1]);
  return out;
}

std::vector<int> promotion(const Poset& poset, std::span<const int> ext, std::size_t i) {
  require_extension(poset, ext);
  if (i >= ext.size()) {
    throw Error(ErrorKind::PositionOutOfRange,
                "position " + std::to_string(i) + " for a sequence of length " + std::to_string(ext.size()));
  }
  std::vector<int> out(ext.begin(), ext.end());
  detail::promote_in_place(poset, out, i);
  return out;
}

std::vector<int> hat_promotion(const Poset& poset, std::span<const int> ext, int j) {
  require_extension(poset, ext);
  auto it = std::find(ext.begin(), ext.end(), j);
  if (it == ext.end()) throw Error(ErrorKind::UnknownLabel, "label " + std::to_string(j) + " not in poset");
  std::vector<int> out(ext.begin(), ext.end());
  detail::promote_in_place(poset, out, static_cast<std::size_t>(it - ext.begin()));
  return out;
}

std::vector<int> pop_shuffle(const OrderedSetPartition& b, std::span<const int> seq) {
  if (ground_of(b) != sorted_copy(seq)) {
    throw Error(ErrorKind::GroundSetMismatch, "partition and sequence have different ground sets");
  }
  std::vector<int> out;
  out.reserve(seq.size());
  for (const auto& block : b.blocks) {
    for (int x : seq) {
      if (std::binary_search(block.begin(), block.end(), x)) out.push_back(x);
    }
  }
  return out;
}

OrderedSetPartition osp_compose(const OrderedSetPartition& a, const OrderedSetPartition& b) {
  if (ground_of(a) != ground_of(b)) {
    throw Error(ErrorKind::GroundSetMismatch, "ordered partitions have different ground sets");
  }
  OrderedSetPartition out;
  for (const auto& ai : a.blocks) {
    std::vector<int> x(ai.begin(), ai.end());
    std::sort(x.begin(), x.end());
    for (const auto& bj : b.blocks) {
      std::vector<int> y(bj.begin(), bj.end());
      std::sort(y.begin(), y.end());
      std::vector<int> meet;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(meet));
      if (!meet.empty()) out.blocks.push_back(std::move(meet));
    }
  }
  return out;
}

State apply_move_unchecked(const ShelfTree& tree, const State& state, const LeafSet& set) {
  State out = state;
  for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
    const auto& n = tree.node(v);
    auto& part = out.parts[v];
    if (n.leaf_parent) {
      for (int leaf : set.members) {
        auto it = std::find(part.begin(), part.end(), leaf);
        if (it != part.end()) {
          detail::promote_in_place(n.poset, part, static_cast<std::size_t>(it - part.begin()));
          break;
        }
      }
    } else {
      detail::pop_related_to_back(part, related_children(tree, set, v));
    }
  }
  return out;
}

State apply_move(const ShelfTree& tree, const State& state, const LeafSet& set) {
  if (!is_admissible(tree, set)) {
    throw Error(ErrorKind::InadmissibleSet, "leaf set {" + set.key() + "} is not admissible");
  }
  if (!is_valid_state(tree, state)) throw Error(ErrorKind::InvalidState, "state is not in L(T)");
  return apply_move_unchecked(tree, state, set);
}

}  // namespace shelfchain
