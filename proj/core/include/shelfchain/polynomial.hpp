#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shelfchain/matrix.hpp"
#include "shelfchain/rational.hpp"

namespace shelfchain {

/// Univariate polynomial in t with exact rational coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  /// Coefficients in ascending degree; trailing zeros are trimmed.
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational evaluate(const Rational& t) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "t^2 - t - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// det(tI - A), exact. Reduces to an integer matrix and runs Hessenberg
/// reduction modulo word-size primes, recombined by CRT until the product
/// of primes exceeds twice the Gershgorin coefficient bound. Throws NotSquare.
RationalPolynomial char_poly(const RationalMatrix& a);

/// Faddeev-LeVerrier over the rationals; O(N^4), for cross-checking.
RationalPolynomial char_poly_faddeev(const RationalMatrix& a);

/// Product of (t - root)^multiplicity.
RationalPolynomial from_roots(const std::vector<std::pair<Rational, std::uint64_t>>& roots);

}  // namespace shelfchain
