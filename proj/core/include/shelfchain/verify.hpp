#pragma once

#include <string>
#include <vector>

#include "shelfchain/extend.hpp"
#include "shelfchain/linform.hpp"
#include "shelfchain/matrix.hpp"
#include "shelfchain/polynomial.hpp"
#include "shelfchain/spectrum.hpp"

namespace shelfchain {

/// x_E = 1/|A(L)| for every admissible set.
Weights uniform_weights(const ShelfTree& tree);

/// Three fixed stochastic weight vectors with pairwise-distinct entries:
/// proportional to 1, 2, 3, ... in admissible_sets order, to the same list
/// reversed, and to the primes 2, 3, 5, ...
std::vector<Weights> standard_weights(const ShelfTree& tree);

/// Multiplicity-weighted product of (t - eigenvalue(w)).
RationalPolynomial spectrum_polynomial(const Spectrum& spectrum, const Weights& w);

struct WeightCheck {
  bool pass = false;
  RationalPolynomial expected;
  RationalPolynomial actual;
  /// expected - actual; zero exactly when the check passes.
  RationalPolynomial residual;
};

struct VerificationReport {
  std::string instance;
  std::size_t dimension = 0;
  std::vector<Weights> weights;
  std::vector<WeightCheck> checks;
  /// Symbolic comparison over the indeterminates (small matrices only).
  bool symbolic_run = false;
  bool symbolic_pass = false;

  bool pass() const;
};

struct VerifyOptions {
  /// Run the multivariate comparison when N is at most this...
  std::size_t symbolic_limit = 8;
  /// ...and the monomial count bound C(N + #indeterminates, N) is at most this.
  std::uint64_t symbolic_monomials = 200000;
};

/// Compares det(tI - M(w)) with the spectrum polynomial for every weight
/// vector. Throws DimensionMismatch when the multiplicities do not sum to N.
VerificationReport verify_spectrum(const ShelfTree& tree, const Spectrum& spectrum, const std::vector<Weights>& ws,
                                   const VerifyOptions& options = {});
VerificationReport verify_spectrum(const SymbolicMatrix& m, const Spectrum& spectrum, const std::vector<Weights>& ws,
                                   const VerifyOptions& options = {});

/// det(tI - M) against the product of (t - eigenvalue)^m as polynomials in
/// t and every x_E. Exponential in N.
bool symbolic_check(const SymbolicMatrix& m, const Spectrum& spectrum);

/// dab_double of the tree's matrix equals the broken tree's matrix under the
/// state bijection. Throws PairNotBreakable.
bool cross_check_dab(const ShelfTree& tree, const BreakPair& pair);

/// The unique left fixed probability vector. Throws NotStochastic or Reducible.
std::vector<Rational> stationary_distribution(const RationalMatrix& a);

}  // namespace shelfchain
