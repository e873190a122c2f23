#include "shelfchain/extend.hpp"

#include <algorithm>
#include <map>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

LeafSet with_leaf(const LeafSet& set, int leaf) {
  auto labels = set.members;
  labels.push_back(leaf);
  return LeafSet(std::move(labels));
}

// admissible sets avoiding the leaves of shelf v
std::vector<LeafSet> sets_off_shelf(const ShelfTree& tree, std::size_t v) {
  const auto& p = tree.node(v).poset;
  std::vector<LeafSet> out;
  for (auto& e : admissible_sets(tree)) {
    if (std::none_of(e.members.begin(), e.members.end(), [&](int l) { return p.contains(l); })) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

bool is_break_pair(const Poset& poset, int a, int b) {
  if (!poset.contains(a) || !poset.contains(b) || !poset.less(a, b)) return false;
  const auto& covers = poset.covers();
  if (std::find(covers.begin(), covers.end(), Cover{a, b}) == covers.end()) return false;
  for (const auto& comp : connected_components(poset)) {
    if (!std::binary_search(comp.begin(), comp.end(), a)) continue;
    return std::all_of(comp.begin(), comp.end(),
                       [&](int x) { return x == a || x == b || poset.less(x, a) || poset.less(b, x); });
  }
  return false;
}

std::vector<std::pair<int, int>> break_pairs(const Poset& poset) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : poset.covers()) {
    if (is_break_pair(poset, a, b)) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset break_relation(const Poset& poset, int a, int b) {
  if (!is_break_pair(poset, a, b)) {
    throw Error(ErrorKind::PairNotBreakable, pair_text(a, b) + " is not a breakable cover");
  }
  auto rel = poset.relations();
  rel.erase(std::remove(rel.begin(), rel.end(), Cover{a, b}), rel.end());
  return validate_poset(poset.elements(), std::move(rel));
}

ChainCompletion chain_completion(const Poset& poset) {
  const auto dec = decompose_forest_ladder(poset);
  ChainCompletion out;
  Poset total;
  for (const auto& comp : dec.components) {
    Poset part = comp.forest_part;
    for (const auto& rank : comp.ranks) {
      if (rank.size() == 2) {
        part = poset_sum(part, chain_poset(rank), SumKind::Ordinal);
        out.breaks.emplace_back(rank[0], rank[1]);
      } else {
        part = poset_sum(part, antichain_poset(rank), SumKind::Ordinal);
      }
    }
    total = poset_sum(total, part, SumKind::Direct);
  }
  out.forest = std::move(total);
  return out;
}

BreakPlan break_plan(const ShelfTree& tree) {
  BreakPlan plan{tree, {}};
  for (std::size_t v = 0; v < tree.leaf_parent_count(); ++v) {
    auto completion = chain_completion(tree.node(v).poset);
    plan.start_tree = plan.start_tree.with_leaf_poset(v, completion.forest);
    for (const auto& [a, b] : completion.breaks) plan.breaks.push_back({v, a, b});
  }
  return plan;
}

std::vector<ShelfTree> plan_trees(const BreakPlan& plan) {
  std::vector<ShelfTree> out{plan.start_tree};
  for (const auto& br : plan.breaks) {
    const auto& cur = out.back();
    out.push_back(cur.with_leaf_poset(br.v, break_relation(cur.node(br.v).poset, br.a, br.b)));
  }
  return out;
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::PropertyA:
      return "A";
    case PairClass::PropertyB:
      return "B";
    case PairClass::Violation:
      return "Violation";
  }
  return "?";
}

PairClass classify_pair(const LinForm& form, const ShelfTree& tree, const BreakPair& pair) {
  const auto& p = tree.node(pair.v).poset;
  const auto base = sets_off_shelf(tree, pair.v);
  const bool a_holds = std::all_of(base.begin(), base.end(), [&](const LeafSet& e) {
    return form.coeff(with_leaf(e, pair.a)) == form.coeff(with_leaf(e, pair.b));
  });
  if (a_holds) return PairClass::PropertyA;
  for (int k : p.elements()) {
    if (!p.leq(k, pair.a)) continue;
    for (const auto& e : base) {
      if (form.coeff(with_leaf(e, k)) != 0) return PairClass::Violation;
    }
  }
  return PairClass::PropertyB;
}

Spectrum extend_spectrum(const Spectrum& spectrum, const ShelfTree& tree, const BreakPair& pair) {
  const auto& node = tree.node(pair.v);
  if (!node.leaf_parent || !is_break_pair(node.poset, pair.a, pair.b)) {
    throw Error(ErrorKind::PairNotBreakable, pair_text(pair.a, pair.b) + " is not breakable at node " + node.id);
  }
  const auto& p = node.poset;
  const auto base = sets_off_shelf(tree, pair.v);
  const std::string tag = " / break" + pair_text(pair.a, pair.b);

  std::vector<SpectrumEntry> produced;
  for (const auto& entry : spectrum.entries) {
    const LinForm& x = entry.eigenvalue;
    const PairClass cls = classify_pair(x, tree, pair);
    if (cls == PairClass::Violation) {
      throw Error(ErrorKind::UpsetPropertyViolation,
                  "entry " + entry.label + " [" + x.to_string() + "] has neither pattern for " +
                      pair_text(pair.a, pair.b));
    }
    LinForm partner;
    for (const auto& e : base) {
      partner.add(e, x.coeff(e));
      for (int k : p.elements()) {
        const LeafSet ek = with_leaf(e, k);
        if (!p.leq(k, pair.a) && !p.leq(k, pair.b)) partner.add(ek, x.coeff(ek));
        if (cls == PairClass::PropertyA && p.less(k, pair.a)) partner.add(ek, -x.coeff(ek));
      }
      if (cls == PairClass::PropertyB) partner.add(with_leaf(e, pair.a), x.coeff(with_leaf(e, pair.b)));
    }
    const std::string suffix = tag + ":" + to_string(cls);
    produced.push_back({x, entry.multiplicity, entry.label + suffix});
    produced.push_back({std::move(partner), entry.multiplicity, entry.label + suffix + "'"});
  }

  Spectrum out;
  out.dimension = spectrum.dimension * 2;
  std::map<LinForm, std::size_t> seen;
  for (auto& e : produced) {
    auto it = seen.find(e.eigenvalue);
    if (it != seen.end()) {
      out.entries[it->second].multiplicity += e.multiplicity;
      continue;
    }
    seen.emplace(e.eigenvalue, out.entries.size());
    out.entries.push_back(std::move(e));
  }
  return out;
}

Spectrum ladder_spectrum(const ShelfTree& tree) {
  const auto plan = break_plan(tree);
  Spectrum spec = forest_spectrum(plan.start_tree);
  ShelfTree current = plan.start_tree;
  for (const auto& br : plan.breaks) {
    spec = extend_spectrum(spec, current, br);
    current = current.with_leaf_poset(br.v, break_relation(current.node(br.v).poset, br.a, br.b));
  }
  return spec;
}

}  // namespace shelfchain
