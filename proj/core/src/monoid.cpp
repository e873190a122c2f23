#include "shelfchain/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

// Strongly connected components; component ids come out sinks first.
template <class Succ>
std::vector<std::size_t> scc(std::size_t n, Succ succ_count, std::size_t degree, std::size_t& count) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0;
  count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < degree) {
        const std::size_t w = succ_count(v, edge++);
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        auto& parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

std::vector<std::uint32_t> image_of(const Transformation& t) {
  std::vector<std::uint32_t> im(t.begin(), t.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

RootOfUnity make_root(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

}  // namespace

Transformation identity_transformation(std::size_t n) {
  Transformation t(n);
  std::iota(t.begin(), t.end(), 0u);
  return t;
}

Transformation compose(const Transformation& s, const Transformation& t) {
  Transformation out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = s[t[i]];
  return out;
}

bool is_idempotent(const Transformation& s) { return compose(s, s) == s; }

std::size_t fix_count(const Transformation& s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) n += s[i] == i;
  return n;
}

std::size_t TransformationMonoid::Hash::operator()(const Transformation& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : t) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::optional<std::size_t> TransformationMonoid::find(const Transformation& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TransformationMonoid::multiply(std::size_t i, std::size_t j) const {
  return index_.at(compose(elements_.at(i), elements_.at(j)));
}

TransformationMonoid generate_monoid(const std::vector<Transformation>& generators, std::size_t cap) {
  TransformationMonoid m;
  m.degree_ = generators.empty() ? 0 : generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != m.degree_) throw Error(ErrorKind::DimensionMismatch, "generators act on different sets");
  }
  m.generators_ = generators;
  const std::size_t gens = generators.size();
  m.elements_.push_back(identity_transformation(m.degree_));
  m.words_.emplace_back();
  m.index_.emplace(m.elements_.front(), 0);
  for (std::size_t x = 0; x < m.elements_.size(); ++x) {
    for (std::size_t g = 0; g < gens; ++g) {
      Transformation y = compose(m.elements_[x], generators[g]);
      auto [it, inserted] = m.index_.emplace(std::move(y), m.elements_.size());
      if (inserted) {
        if (m.elements_.size() >= cap) {
          throw Error(ErrorKind::CapExceeded, "monoid has more than " + std::to_string(cap) + " elements");
        }
        m.elements_.push_back(it->first);
        auto w = m.words_[x];
        w.push_back(static_cast<std::uint32_t>(g));
        m.words_.push_back(std::move(w));
      }
      m.right_.push_back(it->second);
    }
  }
  m.left_.resize(m.elements_.size() * gens);
  for (std::size_t x = 0; x < m.elements_.size(); ++x) {
    for (std::size_t g = 0; g < gens; ++g) {
      m.left_[x * gens + g] = m.index_.at(compose(generators[g], m.elements_[x]));
    }
  }
  for (const auto& g : generators) m.generator_elements_.push_back(m.index_.at(g));
  return m;
}

bool is_r_trivial(const TransformationMonoid& m) {
  const std::size_t gens = m.generators().size();
  std::size_t count = 0;
  scc(m.size(), [&](std::size_t v, std::size_t e) { return m.right(v, e); }, gens, count);
  return count == m.size();
}

std::vector<std::size_t> maximal_subgroup(const TransformationMonoid& m, std::size_t e) {
  const auto& te = m.element(e);
  const auto im = image_of(te);
  std::vector<std::size_t> out{e};
  for (std::size_t h = 0; h < m.size(); ++h) {
    if (h == e) continue;
    const auto& th = m.element(h);
    if (compose(te, compose(th, te)) != th) continue;
    if (image_of(th) == im) out.push_back(h);
  }
  return out;
}

JStructure j_order(const TransformationMonoid& m, IdempotentChoice choice) {
  const std::size_t gens = m.generators().size();
  std::size_t count = 0;
  const auto comp = scc(
      m.size(),
      [&](std::size_t v, std::size_t e) { return e < gens ? m.right(v, e) : m.left(v, e - gens); },
      2 * gens, count);

  // renumber by smallest member
  std::vector<std::size_t> renumber(count, count);
  std::size_t next = 0;
  JStructure js;
  js.class_of.resize(m.size());
  js.classes.resize(count);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (renumber[comp[x]] == count) renumber[comp[x]] = next++;
    js.class_of[x] = renumber[comp[x]];
    js.classes[js.class_of[x]].members.push_back(x);
  }

  // reach[c] = classes reachable from c (those below or equal), as bitsets
  const std::size_t words = (count + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(count, std::vector<std::uint64_t>(words, 0));
  // tarjan ids are sinks first, so successors are finished before their sources
  std::vector<std::size_t> by_tarjan(count);
  for (std::size_t c = 0; c < count; ++c) by_tarjan[c] = c;
  std::vector<std::size_t> tarjan_of(count);
  for (std::size_t x = 0; x < m.size(); ++x) tarjan_of[js.class_of[x]] = comp[x];
  std::sort(by_tarjan.begin(), by_tarjan.end(), [&](auto a, auto b) { return tarjan_of[a] < tarjan_of[b]; });
  for (auto c : by_tarjan) {
    auto& r = reach[c];
    r[c / 64] |= std::uint64_t{1} << (c % 64);
    for (auto x : js.classes[c].members) {
      for (std::size_t g = 0; g < gens; ++g) {
        for (auto y : {m.right(x, g), m.left(x, g)}) {
          const auto d = js.class_of[y];
          if (d == c) continue;
          for (std::size_t w = 0; w < words; ++w) r[w] |= reach[d][w];
        }
      }
    }
  }
  js.order = FinitePoset(count, [&](std::size_t i, std::size_t j) { return (reach[j][i / 64] >> (i % 64)) & 1; });

  for (auto& cls : js.classes) {
    std::vector<std::size_t> idem;
    for (auto x : cls.members) {
      if (is_idempotent(m.element(x))) idem.push_back(x);
    }
    cls.regular = !idem.empty();
    if (!cls.regular) continue;
    cls.idempotent = choice == IdempotentChoice::First ? idem.front() : idem.back();
    cls.group = maximal_subgroup(m, cls.idempotent);
    cls.orthodox = true;
    for (auto e : idem) {
      for (auto f : idem) {
        if (!is_idempotent(compose(m.element(e), m.element(f)))) cls.orthodox = false;
      }
    }
  }
  return js;
}

bool is_abelian(const TransformationMonoid& m, const std::vector<std::size_t>& group) {
  for (auto a : group) {
    for (auto b : group) {
      if (compose(m.element(a), m.element(b)) != compose(m.element(b), m.element(a))) return false;
    }
  }
  return true;
}

std::complex<double> RootOfUnity::value() const {
  if (num == 0) return {1.0, 0.0};
  if (2 * num == den) return {-1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return std::polar(1.0, angle);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const std::int64_t l = std::lcm(den, o.den);
  return make_root(num * (l / den) + o.num * (l / o.den), l);
}

RootOfUnity RootOfUnity::inverse() const { return make_root(-num, den); }

std::vector<Character> characters(const TransformationMonoid& m, const std::vector<std::size_t>& group) {
  if (!is_abelian(m, group)) throw Error(ErrorKind::NonAbelian, "maximal subgroup is not abelian");
  const std::size_t n = group.size();
  std::vector<std::size_t> pos(m.size(), n);
  for (std::size_t i = 0; i < n; ++i) pos[group[i]] = i;
  auto mult = [&](std::size_t i, std::size_t j) { return pos[m.multiply(group[i], group[j])]; };

  auto closure = [&](const std::vector<std::size_t>& gens) {
    std::vector<bool> in(n, false);
    std::deque<std::size_t> q{0};
    in[0] = true;
    while (!q.empty()) {
      auto h = q.front();
      q.pop_front();
      for (auto g : gens) {
        auto y = mult(h, g);
        if (!in[y]) {
          in[y] = true;
          q.push_back(y);
        }
      }
    }
    return in;
  };

  std::vector<std::size_t> gens;
  std::vector<bool> covered = closure(gens);
  for (std::size_t i = 1; i < n; ++i) {
    if (covered[i]) continue;
    gens.push_back(i);
    covered = closure(gens);
  }
  std::vector<std::int64_t> orders;
  for (auto g : gens) {
    std::int64_t k = 1;
    for (std::size_t h = g; h != 0; h = mult(h, g)) ++k;
    orders.push_back(k);
  }

  std::vector<Character> out;
  std::vector<std::int64_t> exps(gens.size(), 0);
  while (true) {
    std::vector<std::optional<RootOfUnity>> val(n);
    val[0] = RootOfUnity{};
    std::deque<std::size_t> q{0};
    bool ok = true;
    while (!q.empty() && ok) {
      auto h = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const auto y = mult(h, gens[i]);
        const RootOfUnity v = *val[h] * make_root(exps[i], orders[i]);
        if (!val[y]) {
          val[y] = v;
          q.push_back(y);
        } else if (!(*val[y] == v)) {
          ok = false;
        }
      }
    }
    if (ok) {
      Character chi;
      for (auto& v : val) chi.values.push_back(*v);
      out.push_back(std::move(chi));
    }
    bool carried = true;
    for (std::size_t i = gens.size(); i-- > 0 && carried;) {
      carried = ++exps[i] == orders[i];
      if (carried) exps[i] = 0;
    }
    if (carried) break;
  }
  if (out.size() != n) {
    throw Error(ErrorKind::NonAbelian, "found " + std::to_string(out.size()) + " characters for a group of order " +
                                           std::to_string(n));
  }
  return out;
}

}  // namespace shelfchain
