#include "shelfchain/spectrum.hpp"

#include <algorithm>
#include <map>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string upset_text(const std::vector<int>& upset) {
  if (upset.empty()) return "∅";
  const bool compact = std::all_of(upset.begin(), upset.end(), [](int x) { return x >= 0 && x < 10; });
  std::string out;
  for (std::size_t i = 0; i < upset.size(); ++i) {
    if (i && !compact) out += ".";
    out += std::to_string(upset[i]);
  }
  return out;
}

}  // namespace

std::uint64_t Spectrum::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

std::vector<std::pair<LinForm, std::uint64_t>> Spectrum::multiset() const {
  std::map<LinForm, std::uint64_t> merged;
  for (const auto& e : entries) {
    if (e.multiplicity > 0) merged[e.eigenvalue] += e.multiplicity;
  }
  return {merged.begin(), merged.end()};
}

std::uint64_t m_alpha(const InnerPartition& alpha) {
  std::uint64_t m = 1;
  for (const auto& part : alpha.parts) {
    for (const auto& block : part) m *= factorial(block.size() - 1);
  }
  return m;
}

std::string spectrum_label(const ShelfTree& tree, const std::vector<std::vector<int>>& upsets,
                           const InnerPartition& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < upsets.size(); ++i) {
    if (i) out += ",";
    out += upset_text(upsets[i]);
  }
  if (!alpha.parts.empty()) out += "; " + format_partition(tree, alpha);
  return out + ")";
}

Spectrum forest_spectrum(const ShelfTree& tree, const ForestOptions& options) {
  const std::size_t shelves = tree.leaf_parent_count();
  std::vector<UpsetLattice> lattices;
  std::vector<std::vector<std::int64_t>> derangements;
  for (std::size_t v = 0; v < shelves; ++v) {
    const auto& p = tree.node(v).poset;
    if (!is_rooted_forest(p)) {
      throw Error(ErrorKind::NotAForest, "leaf poset of node " + tree.node(v).id + " is not a rooted forest");
    }
    lattices.push_back(upset_lattice(p));
    derangements.push_back(derangement_numbers(p, lattices.back()));
  }
  const auto sets = admissible_sets(tree);
  const auto alphas = inner_partitions(tree);

  // compatibility does not depend on S, so tabulate it once
  std::vector<std::vector<bool>> compatible(alphas.size(), std::vector<bool>(sets.size()));
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t e = 0; e < sets.size(); ++e) compatible[a][e] = alpha_compatible(tree, sets[e], alphas[a]);
  }

  Spectrum spec;
  spec.dimension = static_cast<std::size_t>(state_count(tree));
  std::vector<std::size_t> choice(shelves, 0);
  while (true) {
    std::int64_t d = 1;
    std::vector<std::vector<int>> upsets;
    for (std::size_t v = 0; v < shelves; ++v) {
      d *= derangements[v][choice[v]];
      upsets.push_back(lattices[v].upsets[choice[v]]);
    }
    if (d != 0 || options.keep_zero) {
      std::vector<bool> inside(sets.size());
      for (std::size_t e = 0; e < sets.size(); ++e) {
        inside[e] = std::all_of(sets[e].members.begin(), sets[e].members.end(), [&](int leaf) {
          const auto& u = upsets[tree.parent_of_leaf(leaf)];
          return std::binary_search(u.begin(), u.end(), leaf);
        });
      }
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        const std::uint64_t m = static_cast<std::uint64_t>(d) * m_alpha(alphas[a]);
        SpectrumEntry entry;
        for (std::size_t e = 0; e < sets.size(); ++e) {
          if (inside[e] && compatible[a][e]) entry.eigenvalue.add(sets[e], 1);
        }
        entry.multiplicity = m;
        entry.label = spectrum_label(tree, upsets, alphas[a]);
        spec.entries.push_back(std::move(entry));
      }
    }
    std::size_t v = shelves;
    while (v > 0) {
      --v;
      if (++choice[v] < lattices[v].upsets.size()) break;
      choice[v] = 0;
      if (v == 0) return spec;
    }
    if (shelves == 0) return spec;
  }
}

}  // namespace shelfchain
