#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shelfchain/linform.hpp"
#include "shelfchain/tree.hpp"

namespace shelfchain {

struct SpectrumEntry {
  LinForm eigenvalue;
  std::uint64_t multiplicity = 0;
  std::string label;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;
  std::size_t dimension = 0;

  std::uint64_t total_multiplicity() const;
  /// Entries with positive multiplicity, merged by eigenvalue and sorted.
  std::vector<std::pair<LinForm, std::uint64_t>> multiset() const;
};

/// Product over partition-carrying nodes and blocks B of (|B| - 1)!.
std::uint64_t m_alpha(const InnerPartition& alpha);

struct ForestOptions {
  bool keep_zero = false;
};

/// Closed-form spectrum for rooted-forest leaf posets. Throws NotAForest.
Spectrum forest_spectrum(const ShelfTree& tree, const ForestOptions& options = {});

/// Label such as "(123,4; {56})"; empty upsets print as "∅".
std::string spectrum_label(const ShelfTree& tree, const std::vector<std::vector<int>>& upsets,
                           const InnerPartition& alpha);

}  // namespace shelfchain
