#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shelfchain/poset.hpp"
#include "shelfchain/spectrum.hpp"
#include "shelfchain/tree.hpp"

namespace shelfchain {

/// A cover a < b at leaf-parent `v` that can be broken.
struct BreakPair {
  std::size_t v = 0;
  int a = 0;
  int b = 0;

  friend bool operator==(const BreakPair&, const BreakPair&) = default;
};

/// A forest-shelved start tree plus the breaks that turn it into the target.
struct BreakPlan {
  ShelfTree start_tree;
  std::vector<BreakPair> breaks;
};

/// Covers a < b such that b is the only successor of a, a is the only
/// predecessor of b, and the component of a is down(a) + {a, b} + up(b).
std::vector<std::pair<int, int>> break_pairs(const Poset& poset);
bool is_break_pair(const Poset& poset, int a, int b);

/// Drops a < b from the order. Throws PairNotBreakable.
Poset break_relation(const Poset& poset, int a, int b);

struct ChainCompletion {
  Poset forest;
  /// (a, b) pairs, bottom-up; applying them in order recovers the input.
  std::vector<std::pair<int, int>> breaks;
};

/// Turns every two-element ladder rank {a, b} into a < b. Throws NotDecomposable.
ChainCompletion chain_completion(const Poset& poset);

/// Chain-completes every shelf; breaks go shelf by shelf in node order.
BreakPlan break_plan(const ShelfTree& tree);

enum class PairClass { PropertyA, PropertyB, Violation };

std::string to_string(PairClass c);

/// Checks the coefficient pattern of `form` around the pair.
PairClass classify_pair(const LinForm& form, const ShelfTree& tree, const BreakPair& pair);

/// Splits every entry into the entry itself and its partner for the broken
/// tree; merges equal forms. Throws UpsetPropertyViolation.
Spectrum extend_spectrum(const Spectrum& spectrum, const ShelfTree& tree, const BreakPair& pair);

/// Forest spectrum of the chain-completed tree folded through every break.
/// Throws NotDecomposable or UpsetPropertyViolation.
Spectrum ladder_spectrum(const ShelfTree& tree);

/// Every intermediate tree of the plan, start tree first and target last.
std::vector<ShelfTree> plan_trees(const BreakPlan& plan);

}  // namespace shelfchain
