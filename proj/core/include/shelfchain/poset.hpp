#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "shelfchain/finite_poset.hpp"

namespace shelfchain {

using Cover = std::pair<int, int>;

/// A finite naturally-labeled poset on positive integer labels.
///
/// Elements are kept sorted ascending and the cover list is the Hasse diagram
/// (redundant covers are dropped during validation). The strict order is
/// cached as a dense matrix over element indices.
class Poset {
 public:
  Poset() = default;

  const std::vector<int>& elements() const noexcept { return elements_; }
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  bool contains(int label) const;
  /// Position of `label` in elements(); throws UnknownLabel.
  std::size_t index_of(int label) const;

  bool less(int a, int b) const { return less_[index_of(a) * size() + index_of(b)] != 0; }
  bool leq(int a, int b) const { return a == b || less(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Upper covers of `label`.
  std::vector<int> successors(int label) const;
  /// Lower covers of `label`.
  std::vector<int> predecessors(int label) const;

  /// Subposet induced on `labels` (order inherited, covers recomputed).
  Poset induced(std::span<const int> labels) const;

  /// Every strict relation (a, b) with a < b in the poset.
  std::vector<Cover> relations() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.covers_ == b.covers_;
  }

  friend Poset validate_poset(std::vector<int> elements, std::vector<Cover> covers);

 private:
  bool less_at(std::size_t i, std::size_t j) const { return less_[i * size() + j] != 0; }

  std::vector<int> elements_;
  std::vector<Cover> covers_;
  std::vector<std::uint8_t> less_;
};

/// Builds a poset from elements and (possibly redundant) cover pairs.
/// Throws CycleError, LabelingError, UnknownLabel or LabelClash.
Poset validate_poset(std::vector<int> elements, std::vector<Cover> covers);

Poset antichain_poset(std::vector<int> labels);
/// labels[0] < labels[1] < ... in the poset.
Poset chain_poset(std::vector<int> labels);

/// All linear extensions in lexicographic order.
std::vector<std::vector<int>> linear_extensions(const Poset& poset);
std::uint64_t count_linear_extensions(const Poset& poset);
bool is_linear_extension(const Poset& poset, std::span<const int> sequence);

bool is_upset(const Poset& poset, std::span<const int> subset);

/// The upsets of a poset ordered by inclusion, with the full Möbius table.
struct UpsetLattice {
  /// Sorted label sets, ordered by size then lexicographically.
  std::vector<std::vector<int>> upsets;
  FinitePoset order;
  /// mobius_table[i][j] = mu(upsets[i], upsets[j]) (zero when not included).
  std::vector<std::vector<std::int64_t>> mobius_table;

  /// Throws NotAnUpset if `upset` is not a member.
  std::size_t index_of(std::span<const int> upset) const;
  std::int64_t mobius(std::size_t x, std::size_t y) const { return order.mobius(x, y); }
};

UpsetLattice upset_lattice(const Poset& poset);

/// Möbius inversion of the chamber counts |L(P \ S')| over upsets S' above S.
std::int64_t derangement_number(const Poset& poset, std::span<const int> upset);
/// d_S for every upset of the lattice, indexed like lattice.upsets.
std::vector<std::int64_t> derangement_numbers(const Poset& poset, const UpsetLattice& lattice);

enum class SumKind { Direct, Ordinal };

/// Throws LabelClash for shared labels and LabelingError when an ordinal sum
/// would break natural labeling.
Poset poset_sum(const Poset& lower, const Poset& upper, SumKind kind);

bool is_rooted_forest(const Poset& poset);

/// Connected components as sorted label lists, ordered by smallest label.
std::vector<std::vector<int>> connected_components(const Poset& poset);

struct LadderComponent {
  Poset forest_part;
  /// Antichains of size 1 or 2, bottom rank first.
  std::vector<std::vector<int>> ranks;
};

struct LadderDecomposition {
  std::vector<LadderComponent> components;
};

/// Splits each component into a rooted-forest lower part with a ladder on
/// top. Components that are already forests keep an empty ladder; otherwise
/// the ladder is peeled greedily from the top. Throws NotDecomposable.
LadderDecomposition decompose_forest_ladder(const Poset& poset);

/// Direct sum over components of forest_part (+) rank_1 (+) ... (+) rank_m.
Poset reassemble(const LadderDecomposition& decomposition);

}  // namespace shelfchain
