#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "shelfchain/linform.hpp"
#include "shelfchain/rational.hpp"
#include "shelfchain/tree.hpp"

namespace shelfchain {

/// For every admissible set E (in admissible_sets order) the map
/// state index -> index of the moved state.
struct MoveTables {
  std::vector<LeafSet> sets;
  std::vector<std::vector<std::size_t>> images;
};

MoveTables move_tables(const ShelfTree& tree, const StateSpace& space);

/// Square matrix of linear forms, stored by sparse rows.
class SymbolicMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, LinForm>>;  // sorted by column

  SymbolicMatrix() = default;
  SymbolicMatrix(std::vector<State> states, std::vector<LeafSet> sets);

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<State>& states() const noexcept { return states_; }
  /// Admissible sets whose indeterminates may appear.
  const std::vector<LeafSet>& sets() const noexcept { return sets_; }

  const Row& row(std::size_t i) const { return rows_.at(i); }
  LinForm at(std::size_t i, std::size_t j) const;
  void add(std::size_t i, std::size_t j, const LinForm& f);

  friend bool operator==(const SymbolicMatrix&, const SymbolicMatrix&) = default;

 private:
  std::vector<State> states_;
  std::vector<LeafSet> sets_;
  std::vector<Row> rows_;
};

/// Entry (pi, pi') is the sum of x_E over E with apply_move(pi, E) = pi'.
SymbolicMatrix build_transition_matrix(const ShelfTree& tree);

/// Dense exact matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Throws MissingWeight or NegativeWeight.
RationalMatrix substitute(const SymbolicMatrix& m, const Weights& w);

/// The 2N x 2N matrix obtained by replacing every x_E with a 2x2 block,
/// for the cover a < b at leaf-parent `v`. Rows interleave each state with
/// its a<->b swap. Throws PairNotBreakable.
SymbolicMatrix dab_double(const SymbolicMatrix& m, const ShelfTree& tree, std::size_t v, int a, int b);

}  // namespace shelfchain
