#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "shelfchain/monoid.hpp"
#include "shelfchain/spectrum.hpp"
#include "shelfchain/tree.hpp"

namespace shelfchain {

/// The monoid generated by the extended promotions of one leaf poset,
/// acting on its linear extensions.
struct ShelfMonoid {
  std::vector<std::vector<int>> states;
  TransformationMonoid monoid;
  JStructure j;
  /// characters[c] for every regular class c (empty otherwise).
  std::vector<std::vector<Character>> characters;
  /// hat[i] = element index of the promotion at poset.elements()[i].
  std::vector<std::size_t> hat;
};

/// Generators are the promotions at each label, ascending.
ShelfMonoid shelf_monoid(const Poset& poset, IdempotentChoice choice = IdempotentChoice::First);

/// The monoid generated by every tree move, acting on L(T); generators in
/// admissible_sets order.
TransformationMonoid tree_monoid(const ShelfTree& tree, std::size_t cap = 1000000);

/// Direct product of the shelf monoids acting on the product of the shelf
/// state sets (first shelf most significant); generators are single-shelf
/// promotions, shelf by shelf.
TransformationMonoid shelf_product_monoid(const ShelfTree& tree, std::size_t cap = 1000000);

struct DoabOptions {
  bool keep_zero = false;
  IdempotentChoice choice = IdempotentChoice::First;
};

/// Eigenvalues indexed by (J, chi, alpha) with multiplicities from the
/// fixed-point/Möbius formula. Throws NonAbelian, CharacterDomainError,
/// NonIntegerMultiplicity or NonRealEigenvalue.
Spectrum doab_spectrum(const ShelfTree& tree, const DoabOptions& options = {});

/// Multiplicities recomputed as a product of per-factor formulas, keyed by
/// the entry labels of doab_spectrum (zero entries included).
std::map<std::string, std::int64_t> doab_factor_multiplicities(const ShelfTree& tree,
                                                               IdempotentChoice choice = IdempotentChoice::First);

struct MonoidReport {
  std::size_t size = 0;
  bool r_trivial = false;
  JStructure j;
  /// For every class: abelian flag of its maximal subgroup (false if not regular).
  std::vector<bool> abelian;
  std::vector<std::vector<Character>> characters;
  /// Cover relations (lower, upper) of the J-class poset.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

MonoidReport monoid_report(const TransformationMonoid& m, IdempotentChoice choice = IdempotentChoice::First);

}  // namespace shelfchain
