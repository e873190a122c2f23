#include "shelfchain/matrix.hpp"

#include <algorithm>

#include "shelfchain/errors.hpp"
#include "shelfchain/extend.hpp"
#include "shelfchain/shuffle.hpp"

namespace shelfchain {

MoveTables move_tables(const ShelfTree& tree, const StateSpace& space) {
  MoveTables out;
  out.sets = admissible_sets(tree);
  const std::size_t k = tree.nodes().size();
  const std::size_t n = space.size();

  for (const auto& set : out.sets) {
    // image of every component value under this move, per node
    std::vector<std::vector<std::size_t>> comp(k);
    for (std::size_t v = 0; v < k; ++v) {
      const auto& node = tree.node(v);
      const auto& values = space.component_values(v);
      comp[v].resize(values.size());
      const auto related = related_children(tree, set, v);
      for (std::size_t idx = 0; idx < values.size(); ++idx) {
        if (related.empty()) {
          comp[v][idx] = idx;
          continue;
        }
        auto moved = values[idx];
        if (node.leaf_parent) {
          auto pos = std::find(moved.begin(), moved.end(), related.front()) - moved.begin();
          detail::promote_in_place(node.poset, moved, static_cast<std::size_t>(pos));
        } else {
          detail::pop_related_to_back(moved, related);
        }
        comp[v][idx] = space.component_index(v, moved);
      }
    }
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = 0;
      for (std::size_t v = 0; v < k; ++v) {
        const auto digit = (i / space.stride(v)) % space.component_values(v).size();
        j += comp[v][digit] * space.stride(v);
      }
      image[i] = j;
    }
    out.images.push_back(std::move(image));
  }
  return out;
}

SymbolicMatrix::SymbolicMatrix(std::vector<State> states, std::vector<LeafSet> sets)
    : states_(std::move(states)), sets_(std::move(sets)), rows_(states_.size()) {}

LinForm SymbolicMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == r.end() || it->first != j) return {};
  return it->second;
}

void SymbolicMatrix::add(std::size_t i, std::size_t j, const LinForm& f) {
  auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == r.end() || it->first != j) it = r.emplace(it, j, LinForm{});
  it->second += f;
  if (it->second.is_zero()) r.erase(it);
}

SymbolicMatrix build_transition_matrix(const ShelfTree& tree) {
  const StateSpace space(tree);
  const auto tables = move_tables(tree, space);
  SymbolicMatrix m(space.states(), tables.sets);
  for (std::size_t e = 0; e < tables.sets.size(); ++e) {
    const auto x = LinForm::var(tables.sets[e]);
    for (std::size_t i = 0; i < space.size(); ++i) m.add(i, tables.images[e][i], x);
  }
  return m;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes differ");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

RationalMatrix substitute(const SymbolicMatrix& m, const Weights& w) {
  for (const auto& set : m.sets()) {
    auto it = w.find(set);
    if (it == w.end()) throw Error(ErrorKind::MissingWeight, "no weight for x_{" + set.key() + "}");
    if (sgn(it->second) < 0) {
      throw Error(ErrorKind::NegativeWeight, "weight of x_{" + set.key() + "} is negative");
    }
  }
  RationalMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& [j, f] : m.row(i)) out(i, j) = f.evaluate(w);
  }
  return out;
}

SymbolicMatrix dab_double(const SymbolicMatrix& m, const ShelfTree& tree, std::size_t v, int a, int b) {
  const auto& node = tree.node(v);
  if (!node.leaf_parent || !is_break_pair(node.poset, a, b)) {
    throw Error(ErrorKind::PairNotBreakable,
                "(" + std::to_string(a) + "," + std::to_string(b) + ") is not breakable at node " + node.id);
  }
  const Poset& p = node.poset;
  auto swap_ab = [&](std::vector<int> seq) {
    for (int& x : seq) {
      if (x == a) {
        x = b;
      } else if (x == b) {
        x = a;
      }
    }
    return seq;
  };
  auto replace = [](const LeafSet& set, int from, int to) {
    auto labels = set.members;
    std::replace(labels.begin(), labels.end(), from, to);
    return LeafSet(std::move(labels));
  };

  std::vector<State> states;
  states.reserve(2 * m.size());
  for (const auto& s : m.states()) {
    states.push_back(s);
    State hat = s;
    hat.parts[v] = swap_ab(hat.parts[v]);
    states.push_back(std::move(hat));
  }
  SymbolicMatrix out(std::move(states), m.sets());

  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& [j, f] : m.row(i)) {
      for (const auto& [set, c] : f.terms()) {
        std::optional<int> k;
        for (int leaf : set.members) {
          if (p.contains(leaf)) k = leaf;
        }
        const auto x = LinForm::var(set, c);
        if (k && *k == a) {
          out.add(2 * i, 2 * j + 1, x);
          out.add(2 * i + 1, 2 * j, LinForm::var(replace(set, a, b), c));
        } else if (k && *k == b) {
          out.add(2 * i, 2 * j, x);
          out.add(2 * i + 1, 2 * j + 1, LinForm::var(replace(set, b, a), c));
        } else if (k && p.less(*k, a)) {
          out.add(2 * i, 2 * j + 1, x);
          out.add(2 * i + 1, 2 * j, x);
        } else {
          out.add(2 * i, 2 * j, x);
          out.add(2 * i + 1, 2 * j + 1, x);
        }
      }
    }
  }
  return out;
}

}  // namespace shelfchain
