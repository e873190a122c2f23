#include "shelfchain/verify.hpp"

#include <algorithm>
#include <map>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

Weights normalized(const std::vector<LeafSet>& sets, const std::vector<long>& numerators) {
  long total = 0;
  for (auto n : numerators) total += n;
  Weights w;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Rational r(numerators[i], total);
    r.canonicalize();
    w.emplace(sets[i], r);
  }
  return w;
}

std::vector<long> first_primes(std::size_t count) {
  std::vector<long> out;
  for (long c = 2; out.size() < count; ++c) {
    if (std::all_of(out.begin(), out.end(), [&](long p) { return c % p != 0; })) out.push_back(c);
  }
  return out;
}

// Sparse polynomial in t (variable 0) and the x_E (variables 1..).
using Monomial = std::vector<std::uint8_t>;
using Poly = std::map<Monomial, Integer>;

void add_term(Poly& p, const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// linear form in the variables as (variable, coefficient) pairs
using Linear = std::vector<std::pair<std::size_t, Integer>>;

Poly times_linear(const Poly& p, const Linear& l) {
  Poly out;
  for (const auto& [mono, c] : p) {
    for (const auto& [var, k] : l) {
      Monomial m = mono;
      ++m[var];
      add_term(out, m, c * k);
    }
  }
  return out;
}

}  // namespace

Weights uniform_weights(const ShelfTree& tree) {
  const auto sets = admissible_sets(tree);
  return normalized(sets, std::vector<long>(sets.size(), 1));
}

std::vector<Weights> standard_weights(const ShelfTree& tree) {
  const auto sets = admissible_sets(tree);
  std::vector<long> up(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) up[i] = static_cast<long>(i + 1);
  std::vector<long> down(up.rbegin(), up.rend());
  return {normalized(sets, up), normalized(sets, down), normalized(sets, first_primes(sets.size()))};
}

RationalPolynomial spectrum_polynomial(const Spectrum& spectrum, const Weights& w) {
  std::vector<std::pair<Rational, std::uint64_t>> roots;
  for (const auto& e : spectrum.entries) {
    if (e.multiplicity > 0) roots.emplace_back(e.eigenvalue.evaluate(w), e.multiplicity);
  }
  return from_roots(roots);
}

bool VerificationReport::pass() const {
  if (checks.empty()) return false;
  if (symbolic_run && !symbolic_pass) return false;
  return std::all_of(checks.begin(), checks.end(), [](const WeightCheck& c) { return c.pass; });
}

// C(n + vars, n), saturating.
static std::uint64_t monomial_bound(std::size_t n, std::size_t vars) {
  std::uint64_t c = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    c = c * (vars + k) / k;
    if (c > (std::uint64_t{1} << 40)) return c;
  }
  return c;
}

VerificationReport verify_spectrum(const SymbolicMatrix& m, const Spectrum& spectrum, const std::vector<Weights>& ws,
                                   const VerifyOptions& options) {
  if (spectrum.total_multiplicity() != m.size()) {
    throw Error(ErrorKind::DimensionMismatch, "multiplicities sum to " + std::to_string(spectrum.total_multiplicity()) +
                                                  " but the matrix has " + std::to_string(m.size()) + " states");
  }
  VerificationReport report;
  report.dimension = m.size();
  report.weights = ws;
  for (const auto& w : ws) {
    WeightCheck c;
    c.actual = char_poly(substitute(m, w));
    c.expected = spectrum_polynomial(spectrum, w);
    c.residual = c.expected - c.actual;
    c.pass = c.residual.is_zero();
    report.checks.push_back(std::move(c));
  }
  if (m.size() <= options.symbolic_limit && monomial_bound(m.size(), m.sets().size()) <= options.symbolic_monomials) {
    report.symbolic_run = true;
    report.symbolic_pass = symbolic_check(m, spectrum);
  }
  return report;
}

VerificationReport verify_spectrum(const ShelfTree& tree, const Spectrum& spectrum, const std::vector<Weights>& ws,
                                   const VerifyOptions& options) {
  return verify_spectrum(build_transition_matrix(tree), spectrum, ws, options);
}

bool symbolic_check(const SymbolicMatrix& m, const Spectrum& spectrum) {
  const std::size_t n = m.size();
  std::map<LeafSet, std::size_t> var;
  for (const auto& s : m.sets()) var.emplace(s, var.size() + 1);
  const std::size_t nvars = var.size() + 1;
  auto linear = [&](const LinForm& f, long t_coeff) {
    Linear l;
    if (t_coeff) l.emplace_back(0, Integer(t_coeff));
    for (const auto& [set, c] : f.terms()) l.emplace_back(var.at(set), Integer(static_cast<long>(c)));
    return l;
  };

  // det(tI - M) by expansion over rows; dp[mask] = signed sum over column choices
  std::vector<Poly> dp(std::size_t{1} << n);
  dp[0][Monomial(nvars, 0)] = 1;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].empty()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask >> col & 1) continue;
      const LinForm entry = -m.at(row, col);
      Linear l = linear(entry, row == col ? 1 : 0);
      if (l.empty()) continue;
      // sign: number of chosen columns greater than col
      const std::size_t larger = static_cast<std::size_t>(__builtin_popcountll(mask >> (col + 1)));
      if (larger % 2) {
        for (auto& term : l) term.second = -term.second;
      }
      for (const auto& [mono, c] : times_linear(dp[mask], l)) add_term(dp[mask | (std::size_t{1} << col)], mono, c);
    }
    if (mask != 0) dp[mask].clear();
  }
  const Poly det = dp.back();

  Poly expected;
  expected[Monomial(nvars, 0)] = 1;
  for (const auto& e : spectrum.entries) {
    const Linear l = linear(-e.eigenvalue, 1);
    for (std::uint64_t k = 0; k < e.multiplicity; ++k) expected = times_linear(expected, l);
  }
  return det == expected;
}

bool cross_check_dab(const ShelfTree& tree, const BreakPair& pair) {
  const auto m = build_transition_matrix(tree);
  const auto doubled = dab_double(m, tree, pair.v, pair.a, pair.b);
  const auto broken = tree.with_leaf_poset(pair.v, break_relation(tree.node(pair.v).poset, pair.a, pair.b));
  const auto target = build_transition_matrix(broken);
  if (doubled.size() != target.size()) return false;

  const StateSpace space(broken);
  std::vector<std::size_t> sigma(doubled.size());
  std::vector<bool> hit(doubled.size(), false);
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    auto idx = space.find(doubled.states()[i]);
    if (!idx || hit[*idx]) return false;
    hit[*idx] = true;
    sigma[i] = *idx;
  }
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    if (doubled.row(i).size() != target.row(sigma[i]).size()) return false;
    for (const auto& [j, f] : doubled.row(i)) {
      if (target.at(sigma[i], sigma[j]) != f) return false;
    }
  }
  return true;
}

std::vector<Rational> stationary_distribution(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n || n == 0) throw Error(ErrorKind::NotStochastic, "matrix must be square and nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(a(i, j)) < 0) throw Error(ErrorKind::NotStochastic, "negative entry in row " + std::to_string(i));
      sum += a(i, j);
    }
    if (sum != 1) throw Error(ErrorKind::NotStochastic, "row " + std::to_string(i) + " sums to " + format_rational(sum));
  }
  // solve (A^T - I) x = 0 by Gauss-Jordan
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a(j, i) - (i == j ? 1 : 0);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && sgn(g(p, col)) == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(g(p, j), g(row, j));
    const Rational inv = 1 / g(row, col);
    for (std::size_t j = 0; j < n; ++j) g(row, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || sgn(g(r, col)) == 0) continue;
      const Rational f = g(r, col);
      for (std::size_t j = 0; j < n; ++j) g(r, j) -= f * g(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() != n - 1) {
    throw Error(ErrorKind::Reducible, "fixed space has dimension " + std::to_string(n - pivot_col.size()));
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> x(n, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -g(r, free_col);
  Rational total = 0;
  for (const auto& v : x) total += v;
  for (auto& v : x) v /= total;
  return x;
}

}  // namespace shelfchain
