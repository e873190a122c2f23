#include "shelfchain/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace shelfchain {

namespace {

// AHU-style canonical text of a forest given as parent pointers
std::string canonical_forest(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::function<std::string(int)> canon = [&](int v) {
    std::vector<std::string> kids;
    for (int c = 0; c < n; ++c) {
      if (parent[c] == v) kids.push_back(canon(c));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::vector<std::string> roots;
  for (int v = 0; v < n; ++v) {
    if (parent[v] < 0) roots.push_back(canon(v));
  }
  std::sort(roots.begin(), roots.end());
  std::string out;
  for (const auto& r : roots) out += r;
  return out;
}

std::string poset_name(const Poset& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.elements().size(); ++i) out += (i ? "," : "") + std::to_string(p.elements()[i]);
  out += "|";
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    out += (i ? "," : "") + std::to_string(p.covers()[i].first) + "<" + std::to_string(p.covers()[i].second);
  }
  return out + "]";
}


ShelfTree make_tree(const std::string& root, std::map<std::string, std::vector<std::string>> children,
                    std::map<std::string, Poset> posets) {
  TreeSpec spec;
  spec.root = root;
  spec.children = std::move(children);
  spec.leaf_posets = std::move(posets);
  return load_tree(spec);
}

}  // namespace

std::vector<Poset> rooted_forests(std::size_t max_elements) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_elements; ++n) {
    std::set<std::string> seen;
    // element i (0-based) picks a parent among i+1..n-1 or none
    std::vector<int> parent(n, -1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        if (!seen.insert(canonical_forest(parent)).second) return;
        std::vector<int> elements;
        std::vector<Cover> covers;
        for (std::size_t v = 0; v < n; ++v) {
          elements.push_back(static_cast<int>(v) + 1);
          if (parent[v] >= 0) covers.emplace_back(static_cast<int>(v) + 1, parent[v] + 1);
        }
        out.push_back(validate_poset(std::move(elements), std::move(covers)));
        return;
      }
      for (int p = -1; p < static_cast<int>(n); ++p) {
        if (p >= 0 && p <= static_cast<int>(i)) continue;
        parent[i] = p;
        rec(i + 1);
      }
      parent[i] = -1;
    };
    rec(0);
  }
  return out;
}

Poset shift_labels(const Poset& p, int offset) {
  std::vector<int> elements;
  for (int x : p.elements()) elements.push_back(x + offset);
  std::vector<Cover> covers;
  for (const auto& [a, b] : p.covers()) covers.emplace_back(a + offset, b + offset);
  return validate_poset(std::move(elements), std::move(covers));
}

std::vector<Poset> ladder_posets() {
  const std::vector<Poset> bases = {
      Poset{}, antichain_poset({1}), chain_poset({1, 2}), antichain_poset({1, 2})};
  std::vector<std::vector<std::size_t>> ladders;
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::size_t> sizes(len, 1);
    while (true) {
      if (std::count(sizes.begin(), sizes.end(), 2) > 0) ladders.push_back(sizes);
      std::size_t i = len;
      while (i > 0 && sizes[i - 1] == 2) sizes[--i] = 1;
      if (i == 0) break;
      sizes[i - 1] = 2;
    }
  }
  std::vector<Poset> out;
  for (const auto& base : bases) {
    for (const auto& sizes : ladders) {
      Poset p = base;
      int next = static_cast<int>(base.size()) + 1;
      for (auto s : sizes) {
        std::vector<int> rank;
        for (std::size_t k = 0; k < s; ++k) rank.push_back(next++);
        p = poset_sum(p, antichain_poset(rank), SumKind::Ordinal);
      }
      out.push_back(p);
      out.push_back(poset_sum(p, antichain_poset({next}), SumKind::Direct));
      out.push_back(poset_sum(p, chain_poset({next, next + 1}), SumKind::Direct));
    }
  }
  return out;
}

std::vector<std::pair<std::string, ShelfTree>> tree_shapes(const Poset& first, const Poset* second) {
  std::vector<std::pair<std::string, ShelfTree>> out;
  if (!second) {
    out.emplace_back("shelf", make_tree("s1", {}, {{"s1", first}}));
    out.emplace_back("root-shelf", make_tree("r", {{"r", {"s1"}}}, {{"s1", first}}));
    out.emplace_back("root-inner-shelf", make_tree("r", {{"r", {"u1"}}, {"u1", {"s1"}}}, {{"s1", first}}));
    return out;
  }
  const Poset other = shift_labels(*second, first.elements().back());
  const std::map<std::string, Poset> posets = {{"s1", first}, {"s2", other}};
  out.emplace_back("root-two-shelves", make_tree("r", {{"r", {"s1", "s2"}}}, posets));
  out.emplace_back("root-inner-two-shelves", make_tree("r", {{"r", {"u1"}}, {"u1", {"s1", "s2"}}}, posets));
  out.emplace_back("root-two-inner", make_tree("r", {{"r", {"u1", "u2"}}, {"u1", {"s1"}}, {"u2", {"s2"}}}, posets));
  return out;
}

std::vector<CorpusInstance> forest_corpus(const CorpusOptions& options) {
  const auto forests = rooted_forests(options.max_elements);
  std::vector<CorpusInstance> out;
  auto keep = [&](const std::string& base, std::vector<std::pair<std::string, ShelfTree>> shapes) {
    for (auto& [shape, tree] : shapes) {
      const auto n = state_count(tree);
      if (n <= options.max_states) out.push_back({shape + " " + base, std::move(tree), n});
    }
  };
  for (const auto& f : forests) keep(poset_name(f), tree_shapes(f, nullptr));
  for (std::size_t i = 0; i < forests.size(); ++i) {
    for (std::size_t j = i; j < forests.size(); ++j) {
      const auto le = count_linear_extensions(forests[i]) * count_linear_extensions(forests[j]);
      if (le > options.max_states) continue;
      keep(poset_name(forests[i]) + " " + poset_name(forests[j]), tree_shapes(forests[i], &forests[j]));
    }
  }
  return out;
}

std::vector<CorpusInstance> ladder_corpus(const CorpusOptions& options) {
  const auto ladders = ladder_posets();
  std::vector<Poset> partners = rooted_forests(3);
  std::vector<CorpusInstance> out;
  auto keep = [&](const std::string& base, std::vector<std::pair<std::string, ShelfTree>> shapes) {
    for (auto& [shape, tree] : shapes) {
      const auto n = state_count(tree);
      if (n <= options.max_states) out.push_back({shape + " " + base, std::move(tree), n});
    }
  };
  for (const auto& l : ladders) {
    keep(poset_name(l), tree_shapes(l, nullptr));
    for (const auto& f : partners) {
      if (count_linear_extensions(l) * count_linear_extensions(f) * 2 > options.max_states) continue;
      auto shapes = tree_shapes(l, &f);
      shapes.resize(1);
      keep(poset_name(l) + " " + poset_name(f), std::move(shapes));
    }
  }
  for (std::size_t i = 0; i < ladders.size(); ++i) {
    if (ladders[i].size() > 4) continue;
    for (std::size_t j = i; j < ladders.size(); ++j) {
      if (ladders[j].size() > 4) continue;
      if (count_linear_extensions(ladders[i]) * count_linear_extensions(ladders[j]) * 2 > options.max_states) continue;
      auto shapes = tree_shapes(ladders[i], &ladders[j]);
      shapes.resize(1);
      keep(poset_name(ladders[i]) + " " + poset_name(ladders[j]), std::move(shapes));
    }
  }
  return out;
}

}  // namespace shelfchain
