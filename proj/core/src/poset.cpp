#include "shelfchain/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

std::string label_list(std::span<const int> labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

}  // namespace

bool Poset::contains(int label) const {
  return std::binary_search(elements_.begin(), elements_.end(), label);
}

std::size_t Poset::index_of(int label) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
  if (it == elements_.end() || *it != label) {
    throw Error(ErrorKind::UnknownLabel, "label " + std::to_string(label) + " is not in the poset");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<int> Poset::successors(int label) const {
  std::vector<int> out;
  for (const auto& [a, b] : covers_) {
    if (a == label) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Poset::predecessors(int label) const {
  std::vector<int> out;
  for (const auto& [a, b] : covers_) {
    if (b == label) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cover> Poset::relations() const {
  std::vector<Cover> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (less_at(i, j)) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

Poset Poset::induced(std::span<const int> labels) const {
  std::vector<int> subset(labels.begin(), labels.end());
  std::sort(subset.begin(), subset.end());
  std::vector<Cover> rel;
  for (int a : subset) {
    for (int b : subset) {
      if (less(a, b)) rel.emplace_back(a, b);
    }
  }
  return validate_poset(std::move(subset), std::move(rel));
}

Poset validate_poset(std::vector<int> elements, std::vector<Cover> covers) {
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] <= 0) {
      throw Error(ErrorKind::UnknownLabel,
                  "labels must be positive integers, got " + std::to_string(elements[i]));
    }
    if (i > 0 && elements[i] == elements[i - 1]) {
      throw Error(ErrorKind::LabelClash, "duplicate label " + std::to_string(elements[i]));
    }
  }

  Poset p;
  p.elements_ = std::move(elements);
  const std::size_t n = p.size();
  p.less_.assign(n * n, 0);
  for (const auto& [a, b] : covers) {
    const std::size_t i = p.index_of(a);
    const std::size_t j = p.index_of(b);
    if (i == j) {
      throw Error(ErrorKind::CycleError, "cover (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") relates an element to itself");
    }
    p.less_[i * n + j] = 1;
  }
  // transitive closure
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.less_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.less_[k * n + j]) p.less_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.less_[i * n + i]) {
      throw Error(ErrorKind::CycleError,
                  "cover relation is cyclic through " + std::to_string(p.elements_[i]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (p.less_[i * n + j]) {
        throw Error(ErrorKind::LabelingError,
                    std::to_string(p.elements_[i]) + " precedes " + std::to_string(p.elements_[j]) +
                        " but has the larger label");
      }
    }
  }
  // Hasse reduction
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!p.less_[i * n + j]) continue;
      bool covered = true;
      for (std::size_t k = i + 1; k < j && covered; ++k) {
        if (p.less_[i * n + k] && p.less_[k * n + j]) covered = false;
      }
      if (covered) p.covers_.emplace_back(p.elements_[i], p.elements_[j]);
    }
  }
  return p;
}

Poset antichain_poset(std::vector<int> labels) { return validate_poset(std::move(labels), {}); }

Poset chain_poset(std::vector<int> labels) {
  std::vector<Cover> covers;
  for (std::size_t i = 1; i < labels.size(); ++i) covers.emplace_back(labels[i - 1], labels[i]);
  return validate_poset(std::move(labels), std::move(covers));
}

namespace {

void extend_rec(const Poset& p, std::vector<int>& prefix, std::vector<std::size_t>& missing_preds,
                std::vector<bool>& used, std::vector<std::vector<int>>& out) {
  const std::size_t n = p.size();
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  const auto& els = p.elements();
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i] || missing_preds[i] != 0) continue;
    used[i] = true;
    prefix.push_back(els[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (p.less(els[i], els[j])) --missing_preds[j];
    }
    extend_rec(p, prefix, missing_preds, used, out);
    for (std::size_t j = 0; j < n; ++j) {
      if (p.less(els[i], els[j])) ++missing_preds[j];
    }
    prefix.pop_back();
    used[i] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> missing(n, 0);
  const auto& els = poset.elements();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.less(els[i], els[j])) ++missing[j];
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::vector<bool> used(n, false);
  extend_rec(poset, prefix, missing, used, out);
  return out;
}

std::uint64_t count_linear_extensions(const Poset& poset) {
  const std::size_t n = poset.size();
  if (n > 63) throw Error(ErrorKind::InvalidTree, "poset too large to count extensions");
  const auto& els = poset.elements();
  std::vector<Mask> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.less(els[j], els[i])) below[i] |= bit(j);
    }
  }
  // ways[placed] over down-closed sets, grown one minimal element at a time
  std::unordered_map<Mask, std::uint64_t> ways{{0, 1}};
  std::vector<Mask> layer{0};
  for (std::size_t step = 0; step < n; ++step) {
    std::unordered_map<Mask, std::uint64_t> next_ways;
    std::vector<Mask> next_layer;
    for (Mask m : layer) {
      const std::uint64_t w = ways[m];
      for (std::size_t i = 0; i < n; ++i) {
        if ((m & bit(i)) || (below[i] & ~m)) continue;
        const Mask nm = m | bit(i);
        auto [it, inserted] = next_ways.try_emplace(nm, 0);
        if (inserted) next_layer.push_back(nm);
        it->second += w;
      }
    }
    ways = std::move(next_ways);
    layer = std::move(next_layer);
  }
  std::uint64_t total = 0;
  for (Mask m : layer) total += ways[m];
  return n == 0 ? 1 : total;
}

bool is_linear_extension(const Poset& poset, std::span<const int> sequence) {
  if (sequence.size() != poset.size()) return false;
  std::vector<int> sorted(sequence.begin(), sequence.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != poset.elements()) return false;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (poset.less(sequence[j], sequence[i])) return false;
    }
  }
  return true;
}

bool is_upset(const Poset& poset, std::span<const int> subset) {
  std::set<int> members(subset.begin(), subset.end());
  if (members.size() != subset.size()) return false;
  for (int x : members) {
    if (!poset.contains(x)) return false;
    for (int y : poset.elements()) {
      if (poset.less(x, y) && !members.count(y)) return false;
    }
  }
  return true;
}

namespace {

bool size_then_lex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void upsets_rec(const Poset& p, std::size_t pos, std::vector<bool>& in,
                std::vector<std::vector<int>>& out) {
  // elements are visited in descending label order, so everything above the
  // current element has already been decided
  const auto& els = p.elements();
  if (pos == els.size()) {
    std::vector<int> s;
    for (std::size_t i = 0; i < els.size(); ++i) {
      if (in[i]) s.push_back(els[i]);
    }
    out.push_back(std::move(s));
    return;
  }
  const std::size_t i = els.size() - 1 - pos;
  upsets_rec(p, pos + 1, in, out);
  bool allowed = true;
  for (std::size_t j = i + 1; j < els.size() && allowed; ++j) {
    if (p.less(els[i], els[j]) && !in[j]) allowed = false;
  }
  if (allowed) {
    in[i] = true;
    upsets_rec(p, pos + 1, in, out);
    in[i] = false;
  }
}

}  // namespace

std::size_t UpsetLattice::index_of(std::span<const int> upset) const {
  std::vector<int> key(upset.begin(), upset.end());
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(upsets.begin(), upsets.end(), key, size_then_lex);
  if (it == upsets.end() || *it != key) {
    throw Error(ErrorKind::NotAnUpset, label_list(key) + " is not an upset");
  }
  return static_cast<std::size_t>(it - upsets.begin());
}

UpsetLattice upset_lattice(const Poset& poset) {
  UpsetLattice lat;
  std::vector<bool> in(poset.size(), false);
  upsets_rec(poset, 0, in, lat.upsets);
  std::sort(lat.upsets.begin(), lat.upsets.end(), size_then_lex);
  const auto& ups = lat.upsets;
  lat.order = FinitePoset(ups.size(), [&](std::size_t i, std::size_t j) {
    return std::includes(ups[j].begin(), ups[j].end(), ups[i].begin(), ups[i].end());
  });
  lat.mobius_table.reserve(ups.size());
  for (std::size_t i = 0; i < ups.size(); ++i) lat.mobius_table.push_back(lat.order.mobius_from(i));
  return lat;
}

std::vector<std::int64_t> derangement_numbers(const Poset& poset, const UpsetLattice& lattice) {
  const auto& ups = lattice.upsets;
  std::vector<std::int64_t> chambers(ups.size());
  for (std::size_t j = 0; j < ups.size(); ++j) {
    std::vector<int> rest;
    std::set_difference(poset.elements().begin(), poset.elements().end(), ups[j].begin(),
                        ups[j].end(), std::back_inserter(rest));
    chambers[j] = static_cast<std::int64_t>(count_linear_extensions(poset.induced(rest)));
  }
  std::vector<std::int64_t> d(ups.size(), 0);
  for (std::size_t i = 0; i < ups.size(); ++i) {
    for (std::size_t j = 0; j < ups.size(); ++j) {
      if (lattice.order.leq(i, j)) d[i] += lattice.mobius_table[i][j] * chambers[j];
    }
  }
  return d;
}

std::int64_t derangement_number(const Poset& poset, std::span<const int> upset) {
  if (!is_upset(poset, upset)) {
    std::vector<int> s(upset.begin(), upset.end());
    throw Error(ErrorKind::NotAnUpset, label_list(s) + " is not an upset");
  }
  const auto lattice = upset_lattice(poset);
  return derangement_numbers(poset, lattice)[lattice.index_of(upset)];
}

Poset poset_sum(const Poset& lower, const Poset& upper, SumKind kind) {
  std::vector<int> elements = lower.elements();
  for (int x : upper.elements()) {
    if (lower.contains(x)) {
      throw Error(ErrorKind::LabelClash, "label " + std::to_string(x) + " appears in both summands");
    }
    elements.push_back(x);
  }
  std::vector<Cover> covers = lower.covers();
  covers.insert(covers.end(), upper.covers().begin(), upper.covers().end());
  if (kind == SumKind::Ordinal) {
    if (!lower.empty() && !upper.empty() && lower.elements().back() > upper.elements().front()) {
      throw Error(ErrorKind::LabelingError,
                  "ordinal sum needs every lower label below every upper label");
    }
    for (int a : lower.elements()) {
      if (!lower.successors(a).empty()) continue;
      for (int b : upper.elements()) {
        if (upper.predecessors(b).empty()) covers.emplace_back(a, b);
      }
    }
  }
  return validate_poset(std::move(elements), std::move(covers));
}

bool is_rooted_forest(const Poset& poset) {
  std::vector<int> out_degree(poset.size(), 0);
  for (const auto& c : poset.covers()) {
    if (++out_degree[poset.index_of(c.first)] > 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : poset.covers()) {
    const auto ra = find(poset.index_of(a));
    const auto rb = find(poset.index_of(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<int>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (slot[r] == n) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(poset.elements()[i]);
  }
  return comps;
}

LadderDecomposition decompose_forest_ladder(const Poset& poset) {
  LadderDecomposition dec;
  for (const auto& comp : connected_components(poset)) {
    Poset sub = poset.induced(comp);
    if (is_rooted_forest(sub)) {
      dec.components.push_back({std::move(sub), {}});
      continue;
    }
    std::vector<int> rest = comp;
    std::vector<std::vector<int>> ranks;
    while (!rest.empty()) {
      std::vector<int> top;
      std::vector<int> below;
      for (int x : rest) {
        const bool maximal = std::none_of(rest.begin(), rest.end(), [&](int y) { return poset.less(x, y); });
        (maximal ? top : below).push_back(x);
      }
      if (top.size() > 2) break;
      const bool stacked = std::all_of(below.begin(), below.end(), [&](int x) {
        return std::all_of(top.begin(), top.end(), [&](int m) { return poset.less(x, m); });
      });
      if (!stacked) break;
      ranks.push_back(top);
      rest = std::move(below);
    }
    Poset forest = poset.induced(rest);
    if (!is_rooted_forest(forest)) {
      throw Error(ErrorKind::NotDecomposable,
                  "component " + label_list(comp) + " is not a forest with a ladder on top");
    }
    std::reverse(ranks.begin(), ranks.end());
    dec.components.push_back({std::move(forest), std::move(ranks)});
  }
  return dec;
}

Poset reassemble(const LadderDecomposition& decomposition) {
  Poset total;
  for (const auto& comp : decomposition.components) {
    Poset part = comp.forest_part;
    for (const auto& rank : comp.ranks) part = poset_sum(part, antichain_poset(rank), SumKind::Ordinal);
    total = poset_sum(total, part, SumKind::Direct);
  }
  return total;
}

}  // namespace shelfchain
