#include "shelfchain/polynomial.hpp"

#include <algorithm>
#include <cstdint>

#include "shelfchain/errors.hpp"

namespace shelfchain {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Primes just below 2^62, found by Miller-Rabin at first use.
const std::vector<u64>& prime_pool() {
  static const std::vector<u64> pool = [] {
    std::vector<u64> out;
    Integer candidate = (Integer(1) << 62) - 1;
    while (out.size() < 1024) {
      if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) != 0) out.push_back(candidate.get_ui());
      candidate -= 2;
    }
    return out;
  }();
  return pool;
}

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Multiplier with a precomputed quotient for repeated products by `w`.
struct Shoup {
  u64 w;
  u64 wq;
  u64 p;
  Shoup(u64 w_, u64 p_) : w(w_), wq(static_cast<u64>((static_cast<u128>(w_) << 64) / p_)), p(p_) {}
  u64 operator()(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(wq) * x) >> 64);
    u64 r = w * x - q * p;
    return r >= p ? r - p : r;
  }
};

// Characteristic polynomial of an n x n matrix over Z/p, ascending coefficients.
std::vector<u64> char_poly_mod(std::vector<u64> h, std::size_t n, u64 p) {
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m));
    }
    const u64 inv = inv_mod(at(m, m - 1), p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (at(i, m - 1) == 0) continue;
      const u64 u = mul_mod(at(i, m - 1), inv, p);
      const Shoup mu(u, p);
      u64* ri = &at(i, 0);
      const u64* rm = &at(m, 0);
      for (std::size_t j = m - 1; j < n; ++j) {
        const u64 t = mu(rm[j]);
        ri[j] = ri[j] >= t ? ri[j] - t : ri[j] + p - t;
      }
      for (std::size_t r = 0; r < n; ++r) {
        u64 t = at(r, m) + mu(at(r, i));
        at(r, m) = t >= p ? t - p : t;
      }
    }
  }

  // p_k = (t - h_{k-1,k-1}) p_{k-1} - sum_{i} h_{k-i-1,k-1} (prod of subdiagonal) p_{k-i-1}
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = polys[k];
    cur.assign(k + 1, 0);
    const auto& prev = polys[k - 1];
    const u64 diag = at(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      const u64 t = mul_mod(diag, prev[d], p);
      cur[d] = cur[d] >= t ? cur[d] - t : cur[d] + p - t;
    }
    u64 sub = 1;
    for (std::size_t i = 1; i < k; ++i) {
      sub = mul_mod(sub, at(k - i, k - i - 1), p);
      if (sub == 0) break;
      const u64 coef = mul_mod(sub, at(k - i - 1, k - 1), p);
      if (coef == 0) continue;
      const Shoup mc(coef, p);
      const auto& lower = polys[k - i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) {
        const u64 t = mc(lower[d]);
        cur[d] = cur[d] >= t ? cur[d] - t : cur[d] + p - t;
      }
    }
  }
  return polys[n];
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += format_rational(mag);
    if (k > 0) out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out;
}

RationalPolynomial char_poly(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return RationalPolynomial({Rational(1)});

  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
  }
  std::vector<Integer> b(n * n);
  Integer radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      b[i * n + j] = a(i, j).get_num() * (den / a(i, j).get_den());
      row += abs(b[i * n + j]);
    }
    radius = std::max(radius, row);
  }
  // every eigenvalue has modulus <= radius, so |c_k| <= C(n,k) radius^(n-k) <= (radius+1)^n
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), Integer(radius + 1).get_mpz_t(), n);
  bound *= 2;

  std::vector<Integer> crt(n + 1, 0);
  Integer modulus = 1;
  std::vector<u64> reduced(n * n);
  for (u64 p : prime_pool()) {
    if (modulus > bound) break;
    for (std::size_t i = 0; i < n * n; ++i) reduced[i] = mpz_fdiv_ui(b[i].get_mpz_t(), p);
    const auto res = char_poly_mod(reduced, n, p);
    const u64 minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 cur = mpz_fdiv_ui(crt[k].get_mpz_t(), p);
      const u64 diff = res[k] >= cur ? res[k] - cur : res[k] + p - cur;
      const u64 step = mul_mod(diff, minv, p);
      if (step) crt[k] += modulus * Integer(static_cast<unsigned long>(step));
    }
    modulus *= Integer(static_cast<unsigned long>(p));
  }
  if (modulus <= bound) throw Error(ErrorKind::CapExceeded, "ran out of CRT primes");

  const Integer half = modulus / 2;
  std::vector<Rational> coeffs(n + 1);
  Integer scale = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    Integer c = crt[k];
    if (c > half) c -= modulus;
    coeffs[k] = Rational(c, scale);
    coeffs[k].canonicalize();
    scale *= den;
  }
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial char_poly_faddeev(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    RationalMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const RationalMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial from_roots(const std::vector<std::pair<Rational, std::uint64_t>>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& [root, mult] : roots) {
    for (std::uint64_t r = 0; r < mult; ++r) {
      c.emplace_back(0);
      for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - root * c[k];
      c[0] = -root * c[0];
    }
  }
  return RationalPolynomial(std::move(c));
}

}  // namespace shelfchain
