#include "shelfchain/doab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "shelfchain/errors.hpp"
#include "shelfchain/matrix.hpp"
#include "shelfchain/shuffle.hpp"

namespace shelfchain {

namespace {

// One coordinate of the product monoid restricted to its regular J-classes.
struct Factor {
  std::vector<Transformation> idempotent;
  std::vector<std::vector<Transformation>> group;
  std::vector<std::vector<Character>> chars;
  FinitePoset order;
  std::vector<std::string> names;
  // shelf coordinates only
  const ShelfMonoid* shelf = nullptr;
  std::vector<std::size_t> shelf_class;
};

struct Product {
  std::vector<ShelfMonoid> shelves;
  std::vector<Factor> factors;
  std::vector<std::vector<SetPartition>> partitions;
};

std::size_t position_of(const std::vector<std::vector<int>>& sorted, const std::vector<int>& value) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

Product build_product(const ShelfTree& tree, const StateSpace& space, IdempotentChoice choice) {
  Product prod;
  prod.shelves.reserve(tree.leaf_parent_count());
  for (std::size_t v = 0; v < tree.leaf_parent_count(); ++v) {
    prod.shelves.push_back(shelf_monoid(tree.node(v).poset, choice));
  }
  for (std::size_t v = 0; v < tree.leaf_parent_count(); ++v) {
    const auto& sm = prod.shelves[v];
    Factor f;
    f.shelf = &sm;
    for (std::size_t c = 0; c < sm.j.classes.size(); ++c) {
      const auto& cls = sm.j.classes[c];
      if (!cls.regular) continue;
      f.shelf_class.push_back(c);
      f.idempotent.push_back(sm.monoid.element(cls.idempotent));
      std::vector<Transformation> g;
      for (auto h : cls.group) g.push_back(sm.monoid.element(h));
      f.group.push_back(std::move(g));
      f.chars.push_back(sm.characters[c]);
      f.names.push_back(std::to_string(c));
    }
    const auto& ids = f.shelf_class;
    f.order = FinitePoset(ids.size(), [&](std::size_t i, std::size_t j) { return sm.j.order.leq(ids[i], ids[j]); });
    prod.factors.push_back(std::move(f));
  }
  for (auto u : tree.partition_nodes()) {
    const auto& perms = space.component_values(u);
    auto parts = set_partitions(tree.child_keys(u));
    Factor f;
    for (const auto& alpha : parts) {
      OrderedSetPartition osp{alpha};
      Transformation t(perms.size());
      for (std::size_t i = 0; i < perms.size(); ++i) {
        t[i] = static_cast<std::uint32_t>(position_of(perms, pop_shuffle(osp, perms[i])));
      }
      f.idempotent.push_back(t);
      f.group.push_back({t});
      f.chars.push_back({Character{{RootOfUnity{}}}});
      f.names.push_back("");
    }
    // finer partitions are lower
    f.order = FinitePoset(parts.size(), [&](std::size_t i, std::size_t j) {
      return std::all_of(parts[i].begin(), parts[i].end(), [&](const std::vector<int>& block) {
        return std::any_of(parts[j].begin(), parts[j].end(), [&](const std::vector<int>& big) {
          return std::includes(big.begin(), big.end(), block.begin(), block.end());
        });
      });
    });
    prod.factors.push_back(std::move(f));
    prod.partitions.push_back(std::move(parts));
  }
  return prod;
}

// Odometer over a mixed-radix tuple; returns false after the last tuple.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

class FixCounter {
 public:
  explicit FixCounter(const StateSpace& space) : space_(space) {}

  std::size_t operator()(const std::vector<Transformation>& comps) {
    auto it = memo_.find(comps);
    if (it != memo_.end()) return it->second;
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < space_.size(); ++i) {
      bool ok = true;
      for (std::size_t v = 0; v < comps.size() && ok; ++v) {
        const auto digit = (i / space_.stride(v)) % space_.component_values(v).size();
        ok = comps[v][digit] == digit;
      }
      fixed += ok;
    }
    memo_.emplace(comps, fixed);
    return fixed;
  }

 private:
  const StateSpace& space_;
  std::map<std::vector<Transformation>, std::size_t> memo_;
};

std::int64_t round_multiplicity(std::complex<double> value, const std::string& label) {
  const double r = std::round(value.real());
  if (std::abs(value.real() - r) >= 1e-9 || std::abs(value.imag()) >= 1e-9 || r < 0) {
    throw Error(ErrorKind::NonIntegerMultiplicity,
                "multiplicity of " + label + " evaluates to " + std::to_string(value.real()) + "+" +
                    std::to_string(value.imag()) + "i");
  }
  return static_cast<std::int64_t>(r);
}

std::string entry_label(const ShelfTree& tree, const Product& prod, const std::vector<std::size_t>& cls,
                        const std::vector<std::size_t>& chi) {
  const std::size_t shelves = prod.shelves.size();
  std::string out = "(J";
  for (std::size_t i = 0; i < shelves; ++i) out += (i ? "." : "") + prod.factors[i].names[cls[i]];
  out += ", χ";
  for (std::size_t i = 0; i < shelves; ++i) out += (i ? "." : "") + std::to_string(chi[i] + 1);
  if (!prod.partitions.empty()) {
    InnerPartition alpha;
    for (std::size_t u = 0; u < prod.partitions.size(); ++u) alpha.parts.push_back(prod.partitions[u][cls[shelves + u]]);
    out += "; " + format_partition(tree, alpha);
  }
  return out + ")";
}

// Multiplicity of one coordinate, counting fixed points on that coordinate.
std::complex<double> factor_multiplicity(const Factor& f, std::size_t c, const Character& chi) {
  const auto mu = f.order.mobius_to(c);
  std::complex<double> total = 0;
  for (std::size_t h = 0; h < f.group[c].size(); ++h) {
    const auto& x = f.group[c][h];
    double inner = 0;
    for (std::size_t lower = 0; lower < f.order.size(); ++lower) {
      if (!f.order.leq(lower, c) || mu[lower] == 0) continue;
      const auto& e = f.idempotent[lower];
      inner += static_cast<double>(fix_count(compose(e, compose(x, e)))) * static_cast<double>(mu[lower]);
    }
    total += std::conj(chi.values[h].value()) * inner;
  }
  return total / static_cast<double>(f.group[c].size());
}

}  // namespace

ShelfMonoid shelf_monoid(const Poset& poset, IdempotentChoice choice) {
  ShelfMonoid sm;
  sm.states = linear_extensions(poset);
  std::vector<Transformation> gens;
  for (int j : poset.elements()) {
    Transformation t(sm.states.size());
    for (std::size_t i = 0; i < sm.states.size(); ++i) {
      auto moved = sm.states[i];
      auto pos = std::find(moved.begin(), moved.end(), j) - moved.begin();
      detail::promote_in_place(poset, moved, static_cast<std::size_t>(pos));
      t[i] = static_cast<std::uint32_t>(position_of(sm.states, moved));
    }
    gens.push_back(std::move(t));
  }
  sm.monoid = generate_monoid(gens);
  if (gens.empty()) sm.monoid = generate_monoid({identity_transformation(sm.states.size())});
  sm.j = j_order(sm.monoid, choice);
  for (std::size_t g = 0; g < gens.size(); ++g) sm.hat.push_back(sm.monoid.generator_element(g));
  sm.characters.resize(sm.j.classes.size());
  for (std::size_t c = 0; c < sm.j.classes.size(); ++c) {
    if (sm.j.classes[c].regular) sm.characters[c] = characters(sm.monoid, sm.j.classes[c].group);
  }
  return sm;
}

TransformationMonoid tree_monoid(const ShelfTree& tree, std::size_t cap) {
  const StateSpace space(tree);
  const auto tables = move_tables(tree, space);
  std::vector<Transformation> gens;
  for (const auto& img : tables.images) gens.emplace_back(img.begin(), img.end());
  return generate_monoid(gens, cap);
}

TransformationMonoid shelf_product_monoid(const ShelfTree& tree, std::size_t cap) {
  const std::size_t k = tree.leaf_parent_count();
  std::vector<std::vector<std::vector<int>>> states(k);
  std::vector<std::size_t> stride(k, 1);
  std::size_t total = 1;
  for (std::size_t v = 0; v < k; ++v) states[v] = linear_extensions(tree.node(v).poset);
  for (std::size_t v = k; v-- > 0;) {
    stride[v] = total;
    total *= states[v].size();
  }
  std::vector<Transformation> gens;
  for (std::size_t v = 0; v < k; ++v) {
    const auto& p = tree.node(v).poset;
    for (int j : p.elements()) {
      Transformation t(total);
      for (std::size_t i = 0; i < total; ++i) {
        const std::size_t digit = (i / stride[v]) % states[v].size();
        auto moved = states[v][digit];
        auto pos = std::find(moved.begin(), moved.end(), j) - moved.begin();
        detail::promote_in_place(p, moved, static_cast<std::size_t>(pos));
        const std::size_t next = position_of(states[v], moved);
        t[i] = static_cast<std::uint32_t>(i - digit * stride[v] + next * stride[v]);
      }
      gens.push_back(std::move(t));
    }
  }
  return generate_monoid(gens, cap);
}

Spectrum doab_spectrum(const ShelfTree& tree, const DoabOptions& options) {
  const StateSpace space(tree);
  const Product prod = build_product(tree, space, options.choice);
  const std::size_t shelves = prod.shelves.size();
  const std::size_t nf = prod.factors.size();
  const auto sets = admissible_sets(tree);

  std::vector<std::size_t> radix(nf);
  std::size_t count = 1;
  for (std::size_t f = 0; f < nf; ++f) {
    radix[f] = prod.factors[f].order.size();
    count *= radix[f];
  }
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> d(nf);
    for (std::size_t f = nf; f-- > 0;) {
      d[f] = idx % radix[f];
      idx /= radix[f];
    }
    return d;
  };
  // poset of product classes, componentwise
  const FinitePoset order(count, [&](std::size_t i, std::size_t j) {
    const auto a = decode(i);
    const auto b = decode(j);
    for (std::size_t f = 0; f < nf; ++f) {
      if (!prod.factors[f].order.leq(a[f], b[f])) return false;
    }
    return true;
  });

  // per E: the promotion element of each shelf
  std::vector<std::vector<std::size_t>> moves(sets.size(), std::vector<std::size_t>(shelves, 0));
  for (std::size_t e = 0; e < sets.size(); ++e) {
    for (int leaf : sets[e].members) {
      const auto v = tree.parent_of_leaf(leaf);
      moves[e][v] = prod.shelves[v].hat[tree.node(v).poset.index_of(leaf)];
    }
  }

  FixCounter fix(space);
  Spectrum spec;
  spec.dimension = space.size();

  std::vector<std::size_t> shelf_radix(shelves);
  for (std::size_t i = 0; i < shelves; ++i) shelf_radix[i] = prod.factors[i].order.size();
  std::vector<std::size_t> shelf_cls(shelves, 0);
  do {
    std::vector<std::size_t> chi_radix(shelves);
    for (std::size_t i = 0; i < shelves; ++i) chi_radix[i] = prod.factors[i].chars[shelf_cls[i]].size();
    std::vector<std::size_t> chi(shelves, 0);
    do {
      std::vector<std::size_t> alpha_radix(radix.begin() + static_cast<std::ptrdiff_t>(shelves), radix.end());
      std::vector<std::size_t> alpha(nf - shelves, 0);
      do {
        std::vector<std::size_t> cls = shelf_cls;
        cls.insert(cls.end(), alpha.begin(), alpha.end());
        std::size_t idx = 0;
        for (std::size_t f = 0; f < nf; ++f) idx = idx * radix[f] + cls[f];
        const std::string label = entry_label(tree, prod, cls, chi);

        InnerPartition inner;
        for (std::size_t u = 0; u < prod.partitions.size(); ++u) inner.parts.push_back(prod.partitions[u][alpha[u]]);

        // eigenvalue
        LinForm eigen;
        bool real = true;
        std::string nonreal_detail;
        for (std::size_t e = 0; e < sets.size(); ++e) {
          if (!alpha_compatible(tree, sets[e], inner)) continue;
          RootOfUnity coeff;
          bool above = true;
          for (std::size_t i = 0; i < shelves && above; ++i) {
            const auto& sm = prod.shelves[i];
            const std::size_t c = prod.factors[i].shelf_class[shelf_cls[i]];
            if (!sm.j.above(moves[e][i], c)) {
              above = false;
              break;
            }
            const auto& jc = sm.j.classes[c];
            const std::size_t y = sm.monoid.multiply(sm.monoid.multiply(jc.idempotent, moves[e][i]), jc.idempotent);
            auto it = std::find(jc.group.begin(), jc.group.end(), y);
            if (it == jc.group.end()) {
              throw Error(ErrorKind::CharacterDomainError,
                          "e x e leaves the maximal subgroup for x_{" + sets[e].key() + "} in " + label);
            }
            coeff = coeff * prod.factors[i].chars[shelf_cls[i]][chi[i]]
                                .values[static_cast<std::size_t>(it - jc.group.begin())];
          }
          if (!above) continue;
          if (!coeff.is_real()) {
            real = false;
            nonreal_detail = "x_{" + sets[e].key() + "}";
            continue;
          }
          eigen.add(sets[e], coeff.sign());
        }

        // multiplicity over the product group H_J and the classes below J
        const auto mu = order.mobius_to(idx);
        std::vector<std::size_t> hradix(nf);
        for (std::size_t f = 0; f < nf; ++f) hradix[f] = prod.factors[f].group[cls[f]].size();
        std::size_t hsize = 1;
        for (auto r : hradix) hsize *= r;
        std::vector<std::size_t> h(nf, 0);
        std::complex<double> total = 0;
        do {
          std::complex<double> conj_chi = 1;
          for (std::size_t i = 0; i < shelves; ++i) {
            conj_chi *= std::conj(prod.factors[i].chars[cls[i]][chi[i]].values[h[i]].value());
          }
          double inner_sum = 0;
          for (std::size_t lower = 0; lower < count; ++lower) {
            if (mu[lower] == 0 || !order.leq(lower, idx)) continue;
            const auto lc = decode(lower);
            std::vector<Transformation> comps(nf);
            for (std::size_t f = 0; f < nf; ++f) {
              const auto& e = prod.factors[f].idempotent[lc[f]];
              comps[f] = compose(e, compose(prod.factors[f].group[cls[f]][h[f]], e));
            }
            inner_sum += static_cast<double>(fix(comps)) * static_cast<double>(mu[lower]);
          }
          total += conj_chi * inner_sum;
        } while (advance(h, hradix));
        const auto m = round_multiplicity(total / static_cast<double>(hsize), label);

        if (!real) {
          if (m > 0) {
            throw Error(ErrorKind::NonRealEigenvalue, label + " has a non-real coefficient at " + nonreal_detail);
          }
        } else if (m > 0 || options.keep_zero) {
          spec.entries.push_back({std::move(eigen), static_cast<std::uint64_t>(m), label});
        }
      } while (advance(alpha, alpha_radix));
    } while (advance(chi, chi_radix));
  } while (advance(shelf_cls, shelf_radix));
  return spec;
}

std::map<std::string, std::int64_t> doab_factor_multiplicities(const ShelfTree& tree, IdempotentChoice choice) {
  const StateSpace space(tree);
  const Product prod = build_product(tree, space, choice);
  const std::size_t shelves = prod.shelves.size();
  const std::size_t nf = prod.factors.size();
  std::map<std::string, std::int64_t> out;

  std::vector<std::size_t> radix(nf);
  for (std::size_t f = 0; f < nf; ++f) radix[f] = prod.factors[f].order.size();
  std::vector<std::size_t> cls(nf, 0);
  do {
    std::vector<std::size_t> chi_radix(shelves);
    for (std::size_t i = 0; i < shelves; ++i) chi_radix[i] = prod.factors[i].chars[cls[i]].size();
    std::vector<std::size_t> chi(shelves, 0);
    do {
      const std::string label = entry_label(tree, prod, cls, chi);
      std::complex<double> m = 1;
      for (std::size_t f = 0; f < nf; ++f) {
        const auto& fac = prod.factors[f];
        m *= factor_multiplicity(fac, cls[f], fac.chars[cls[f]][f < shelves ? chi[f] : 0]);
      }
      out[label] = round_multiplicity(m, label);
    } while (advance(chi, chi_radix));
  } while (advance(cls, radix));
  return out;
}

MonoidReport monoid_report(const TransformationMonoid& m, IdempotentChoice choice) {
  MonoidReport r;
  r.size = m.size();
  r.r_trivial = is_r_trivial(m);
  r.j = j_order(m, choice);
  const std::size_t n = r.j.classes.size();
  r.abelian.assign(n, false);
  r.characters.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& cls = r.j.classes[c];
    if (!cls.regular) continue;
    r.abelian[c] = is_abelian(m, cls.group);
    if (r.abelian[c]) r.characters[c] = characters(m, cls.group);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.j.order.less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (r.j.order.less(i, k) && r.j.order.less(k, j)) cover = false;
      }
      if (cover) r.covers.emplace_back(i, j);
    }
  }
  return r;
}

}  // namespace shelfchain
