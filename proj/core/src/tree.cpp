#include "shelfchain/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

std::string join_entries(const std::vector<std::string>& names) {
  const bool compact = std::all_of(names.begin(), names.end(), [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i && !compact) out += ",";
    out += names[i];
  }
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da && db) {
    const auto sa = strip_zeros(a);
    const auto sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (da != db) return da;
  return a < b;
}

LeafSet::LeafSet(std::vector<int> labels) : members(std::move(labels)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool LeafSet::contains(int label) const {
  return std::binary_search(members.begin(), members.end(), label);
}

std::string LeafSet::key() const {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out;
}

LeafSet parse_leaf_set(std::string_view key) {
  std::vector<int> labels;
  std::size_t start = 0;
  while (start < key.size()) {
    auto end = key.find(',', start);
    if (end == std::string_view::npos) end = key.size();
    auto token = key.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!all_digits(token)) {
      throw Error(ErrorKind::ParseError, "malformed leaf-set key '" + std::string(key) + "'");
    }
    labels.push_back(std::stoi(std::string(token)));
    start = end + 1;
  }
  return LeafSet(std::move(labels));
}

std::size_t ShelfTree::node_index(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  throw Error(ErrorKind::InvalidTree, "unknown inner node '" + std::string(id) + "'");
}

std::vector<std::size_t> ShelfTree::partition_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = leaf_parent_count_; i < nodes_.size(); ++i) out.push_back(i);
  return out;
}

std::size_t ShelfTree::parent_of_leaf(int label) const {
  auto it = leaf_parent_.find(label);
  if (it == leaf_parent_.end()) {
    throw Error(ErrorKind::UnknownLabel, "leaf " + std::to_string(label) + " is not in the tree");
  }
  return it->second;
}

std::vector<int> ShelfTree::child_keys(std::size_t v) const {
  const auto& n = node(v);
  if (n.leaf_parent) return n.poset.elements();
  return {n.children.begin(), n.children.end()};
}

std::string ShelfTree::child_name(std::size_t v, int key) const {
  if (node(v).leaf_parent) return std::to_string(key);
  return node(static_cast<std::size_t>(key)).id;
}

ShelfTree ShelfTree::with_leaf_poset(std::size_t v, Poset poset) const {
  if (!node(v).leaf_parent || node(v).poset.elements() != poset.elements()) {
    throw Error(ErrorKind::InvalidTree, "replacement poset must keep the leaves of node " + node(v).id);
  }
  ShelfTree copy = *this;
  copy.nodes_[v].poset = std::move(poset);
  return copy;
}

TreeSpec ShelfTree::spec() const {
  TreeSpec s;
  s.root = nodes_[root_].id;
  for (const auto& n : nodes_) {
    auto& kids = s.children[n.id];
    for (auto c : n.children) kids.push_back(nodes_[c].id);
    if (n.leaf_parent) s.leaf_posets[n.id] = n.poset;
  }
  return s;
}

ShelfTree load_tree(const TreeSpec& spec) {
  auto children_of = [&](const std::string& id) -> const std::vector<std::string>& {
    static const std::vector<std::string> none;
    auto it = spec.children.find(id);
    return it == spec.children.end() ? none : it->second;
  };

  // breadth-first walk from the root, rejecting shared or cyclic children
  std::map<std::string, int> depth;
  std::map<std::string, std::string> parent;
  std::deque<std::string> queue{spec.root};
  depth[spec.root] = 0;
  if (spec.root.empty()) throw Error(ErrorKind::InvalidTree, "missing root");
  while (!queue.empty()) {
    const auto id = queue.front();
    queue.pop_front();
    for (const auto& c : children_of(id)) {
      if (depth.count(c)) {
        throw Error(ErrorKind::InvalidTree, "node '" + c + "' is reached twice");
      }
      depth[c] = depth[id] + 1;
      parent[c] = id;
      queue.push_back(c);
    }
  }
  for (const auto& [id, kids] : spec.children) {
    if (!depth.count(id)) throw Error(ErrorKind::InvalidTree, "node '" + id + "' is not below the root");
  }
  for (const auto& [id, poset] : spec.leaf_posets) {
    if (!depth.count(id)) {
      throw Error(ErrorKind::InvalidTree, "leaf poset given for unknown node '" + id + "'");
    }
    if (!children_of(id).empty()) {
      throw Error(ErrorKind::InvalidTree, "node '" + id + "' has inner children and a leaf poset");
    }
    if (poset.empty()) throw Error(ErrorKind::InvalidTree, "leaf poset of '" + id + "' is empty");
  }

  std::optional<int> shelf_depth;
  for (const auto& [id, d] : depth) {
    if (!children_of(id).empty()) continue;
    if (!spec.leaf_posets.count(id)) {
      throw Error(ErrorKind::MissingLeafPoset, "node '" + id + "' has no children and no leaf poset");
    }
    if (shelf_depth && *shelf_depth != d) {
      throw Error(ErrorKind::UnequalDepth, "leaf-parents at depths " + std::to_string(*shelf_depth) +
                                               " and " + std::to_string(d));
    }
    shelf_depth = d;
  }

  std::vector<std::string> ids;
  for (const auto& [id, d] : depth) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
    if (depth[a] != depth[b]) return depth[a] > depth[b];
    return natural_less(a, b);
  });

  ShelfTree t;
  t.depth_ = *shelf_depth + 1;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  for (const auto& id : ids) {
    ShelfTree::Node n;
    n.id = id;
    n.depth = depth[id];
    if (parent.count(id)) n.parent = index[parent[id]];
    for (const auto& c : children_of(id)) n.children.push_back(index[c]);
    std::sort(n.children.begin(), n.children.end());
    n.leaf_parent = n.children.empty();
    if (n.leaf_parent) {
      n.poset = spec.leaf_posets.at(id);
      ++t.leaf_parent_count_;
    }
    t.nodes_.push_back(std::move(n));
  }
  t.root_ = index[spec.root];

  for (std::size_t v = 0; v < t.leaf_parent_count_; ++v) {
    for (int leaf : t.nodes_[v].poset.elements()) {
      if (!t.leaf_parent_.emplace(leaf, v).second) {
        throw Error(ErrorKind::DuplicateLeafLabel, "leaf " + std::to_string(leaf) + " appears twice");
      }
      t.all_leaves_.push_back(leaf);
    }
  }
  std::sort(t.all_leaves_.begin(), t.all_leaves_.end());
  // nodes are bottom-up, so children are complete before their parents
  for (auto& n : t.nodes_) {
    if (n.leaf_parent) {
      n.leaves = n.poset.elements();
    } else {
      for (auto c : n.children) {
        const auto& sub = t.nodes_[c].leaves;
        n.leaves.insert(n.leaves.end(), sub.begin(), sub.end());
      }
      std::sort(n.leaves.begin(), n.leaves.end());
    }
  }
  return t;
}

bool is_valid_state(const ShelfTree& tree, const State& state) {
  if (state.parts.size() != tree.nodes().size()) return false;
  for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
    const auto& n = tree.node(v);
    const auto& part = state.parts[v];
    if (n.leaf_parent) {
      if (!is_linear_extension(n.poset, part)) return false;
    } else {
      std::vector<int> sorted = part;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != tree.child_keys(v)) return false;
    }
  }
  return true;
}

std::string format_state(const ShelfTree& tree, const State& state) {
  std::string out;
  for (std::size_t v = 0; v < state.parts.size(); ++v) {
    if (v) out += "|";
    std::vector<std::string> names;
    for (int key : state.parts[v]) names.push_back(tree.child_name(v, key));
    out += join_entries(names);
  }
  return out;
}

State parse_state(const ShelfTree& tree, std::string_view text) {
  std::vector<std::string_view> chunks;
  std::size_t start = 0;
  while (true) {
    auto end = text.find('|', start);
    chunks.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (chunks.size() != tree.nodes().size()) {
    throw Error(ErrorKind::InvalidState, "expected " + std::to_string(tree.nodes().size()) +
                                             " components in '" + std::string(text) + "'");
  }
  State s;
  for (std::size_t v = 0; v < chunks.size(); ++v) {
    std::vector<std::string> tokens;
    const auto chunk = chunks[v];
    if (chunk.find(',') != std::string_view::npos) {
      std::size_t a = 0;
      while (true) {
        auto b = chunk.find(',', a);
        tokens.emplace_back(chunk.substr(a, b == std::string_view::npos ? std::string_view::npos : b - a));
        if (b == std::string_view::npos) break;
        a = b + 1;
      }
    } else {
      for (char c : chunk) tokens.emplace_back(1, c);
    }
    std::vector<int> part;
    const auto keys = tree.child_keys(v);
    for (const auto& tok : tokens) {
      auto it = std::find_if(keys.begin(), keys.end(), [&](int k) { return tree.child_name(v, k) == tok; });
      if (it == keys.end()) {
        throw Error(ErrorKind::InvalidState, "'" + tok + "' is not a child of node " + tree.node(v).id);
      }
      part.push_back(*it);
    }
    s.parts.push_back(std::move(part));
  }
  if (!is_valid_state(tree, s)) {
    throw Error(ErrorKind::InvalidState, "'" + std::string(text) + "' is not a total ordering of the tree");
  }
  return s;
}

StateSpace::StateSpace(const ShelfTree& tree) {
  const std::size_t k = tree.nodes().size();
  values_.resize(k);
  for (std::size_t v = 0; v < k; ++v) {
    const auto& n = tree.node(v);
    if (n.leaf_parent) {
      values_[v] = linear_extensions(n.poset);
    } else {
      std::vector<int> perm = tree.child_keys(v);
      do {
        values_[v].push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  strides_.assign(k, 1);
  std::size_t total = 1;
  for (std::size_t v = k; v-- > 0;) {
    strides_[v] = total;
    total *= values_[v].size();
  }
  states_.reserve(total);
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t i = 0; i < total; ++i) {
    State s;
    s.parts.reserve(k);
    for (std::size_t v = 0; v < k; ++v) s.parts.push_back(values_[v][(i / strides_[v]) % values_[v].size()]);
    states_.push_back(std::move(s));
  }
}

std::size_t StateSpace::component_index(std::size_t v, const std::vector<int>& value) const {
  const auto& vals = values_.at(v);
  auto it = std::lower_bound(vals.begin(), vals.end(), value);
  if (it == vals.end() || *it != value) {
    throw Error(ErrorKind::InvalidState, "component value not admissible");
  }
  return static_cast<std::size_t>(it - vals.begin());
}

std::optional<std::size_t> StateSpace::find(const State& state) const {
  if (state.parts.size() != values_.size()) return std::nullopt;
  std::size_t idx = 0;
  for (std::size_t v = 0; v < values_.size(); ++v) {
    const auto& vals = values_[v];
    auto it = std::lower_bound(vals.begin(), vals.end(), state.parts[v]);
    if (it == vals.end() || *it != state.parts[v]) return std::nullopt;
    idx += static_cast<std::size_t>(it - vals.begin()) * strides_[v];
  }
  return idx;
}

std::size_t StateSpace::index_of(const State& state) const {
  auto idx = find(state);
  if (!idx) throw Error(ErrorKind::InvalidState, "state is not in the state space");
  return *idx;
}

StateSpace state_space(const ShelfTree& tree) { return StateSpace(tree); }

std::uint64_t state_count(const ShelfTree& tree) {
  std::uint64_t total = 1;
  for (const auto& n : tree.nodes()) {
    total *= n.leaf_parent ? count_linear_extensions(n.poset) : factorial(n.children.size());
  }
  return total;
}

std::vector<LeafSet> admissible_sets(const ShelfTree& tree) {
  std::vector<std::vector<int>> acc{{}};
  for (std::size_t v = 0; v < tree.leaf_parent_count(); ++v) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : acc) {
      next.push_back(partial);
      for (int leaf : tree.node(v).poset.elements()) {
        auto with = partial;
        with.push_back(leaf);
        next.push_back(std::move(with));
      }
    }
    acc = std::move(next);
  }
  std::vector<LeafSet> out;
  out.reserve(acc.size());
  for (auto& labels : acc) out.emplace_back(std::move(labels));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const ShelfTree& tree, const LeafSet& set) {
  std::set<std::size_t> parents;
  for (int leaf : set.members) {
    std::size_t p;
    try {
      p = tree.parent_of_leaf(leaf);
    } catch (const Error&) {
      return false;
    }
    if (!parents.insert(p).second) return false;
  }
  return true;
}

std::vector<int> related_children(const ShelfTree& tree, const LeafSet& set, std::size_t v) {
  const auto& n = tree.node(v);
  std::vector<int> out;
  if (n.leaf_parent) {
    for (int leaf : n.poset.elements()) {
      if (set.contains(leaf)) out.push_back(leaf);
    }
    return out;
  }
  for (auto c : n.children) {
    const auto& below = tree.node(c).leaves;
    if (std::any_of(below.begin(), below.end(), [&](int l) { return set.contains(l); })) {
      out.push_back(static_cast<int>(c));
    }
  }
  return out;
}

std::vector<SetPartition> set_partitions(const std::vector<int>& ground) {
  std::vector<SetPartition> out;
  const std::size_t n = ground.size();
  if (n == 0) return {SetPartition{}};
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t blocks) {
    if (pos == n) {
      SetPartition p(blocks);
      for (std::size_t i = 0; i < n; ++i) p[rgs[i]].push_back(ground[i]);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::vector<InnerPartition> inner_partitions(const ShelfTree& tree) {
  std::vector<InnerPartition> acc{InnerPartition{}};
  for (auto v : tree.partition_nodes()) {
    const auto options = set_partitions(tree.child_keys(v));
    std::vector<InnerPartition> next;
    for (const auto& partial : acc) {
      for (const auto& p : options) {
        auto with = partial;
        with.parts.push_back(p);
        next.push_back(std::move(with));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

bool alpha_compatible(const ShelfTree& tree, const LeafSet& set, const InnerPartition& alpha) {
  const auto nodes = tree.partition_nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto related = related_children(tree, set, nodes[i]);
    for (const auto& block : alpha.parts.at(i)) {
      std::size_t inside = 0;
      for (int c : block) {
        if (std::find(related.begin(), related.end(), c) != related.end()) ++inside;
      }
      if (inside != 0 && inside != block.size()) return false;
    }
  }
  return true;
}

std::string format_partition(const ShelfTree& tree, const InnerPartition& alpha) {
  const auto nodes = tree.partition_nodes();
  std::string out;
  for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
    if (i) out += " ";
    out += "{";
    const auto& blocks = alpha.parts[i];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) out += ",";
      std::vector<std::string> names;
      for (int c : blocks[b]) names.push_back(tree.child_name(nodes[i], c));
      const bool compact = std::all_of(names.begin(), names.end(), [](const auto& s) { return s.size() == 1; });
      for (std::size_t j = 0; j < names.size(); ++j) {
        if (j && !compact) out += "+";
        out += names[j];
      }
    }
    out += "}";
  }
  return out;
}

}  // namespace shelfchain
