#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/matrix.hpp"
#include "shelfchain/polynomial.hpp"
#include "shelfchain/verify.hpp"

namespace sc = shelfchain;

namespace {

sc::RationalPolynomial poly(std::vector<sc::Rational> c) { return sc::RationalPolynomial(std::move(c)); }

}  // namespace

TEST(Polynomial, Arithmetic) {
  const auto a = poly({1, 1});   // t + 1
  const auto b = poly({-1, 1});  // t - 1
  EXPECT_EQ(a * b, poly({-1, 0, 1}));
  EXPECT_EQ(a - a, sc::RationalPolynomial{});
  EXPECT_EQ((a + b).degree(), 1);
  EXPECT_EQ((a * b).evaluate(3), 8);
  EXPECT_EQ(sc::from_roots({{1, 2}, {-1, 1}}), poly({1, -1, -1, 1}));
}

TEST(Polynomial, IdentityAndCompanion) {
  EXPECT_EQ(sc::char_poly(sc::RationalMatrix::identity(3)), sc::from_roots({{1, 3}}));
  sc::RationalMatrix c(2, 2);
  c(0, 1) = 1;
  c(1, 0) = 1;
  c(1, 1) = 1;
  EXPECT_EQ(sc::char_poly(c), poly({-1, -1, 1}));
  EXPECT_THROW(sc::char_poly(sc::RationalMatrix(2, 3)), sc::Error);
}

TEST(Polynomial, EmptyMatrix) { EXPECT_EQ(sc::char_poly(sc::RationalMatrix(0, 0)), poly({1})); }

TEST(Polynomial, AgreesWithFaddeevOnRandomMatrices) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int round = 0; round < 5; ++round) {
      sc::RationalMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = sc::Rational(num(rng), den(rng));
          a(i, j).canonicalize();
        }
      const auto p = sc::char_poly(a);
      EXPECT_EQ(p, sc::char_poly_faddeev(a));
      EXPECT_EQ(p.degree(), static_cast<int>(n));
      EXPECT_EQ(p.coeff(n), 1);
    }
  }
}

TEST(Polynomial, LargeEntries) {
  sc::RationalMatrix a(3, 3);
  const sc::Rational big = sc::Rational(sc::Integer("123456789012345678901234567890"), 7);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = big * static_cast<long>(i + 2 * j + 1);
  EXPECT_EQ(sc::char_poly(a), sc::char_poly_faddeev(a));
}

TEST(Polynomial, TransitionMatrixAtUniformWeights) {
  const auto t = fixtures::forest_pair();
  const auto a = sc::substitute(sc::build_transition_matrix(t), sc::uniform_weights(t));
  // Eigenvalues of the depth-2 example at x_E = 1/8: 1/2, 1, 1/4, 1/2, 1/8, 1/4.
  const std::vector<std::pair<sc::Rational, std::uint64_t>> roots{
      {sc::Rational(1, 8), 1}, {sc::Rational(1, 4), 2}, {sc::Rational(1, 2), 2}, {1, 1}};
  EXPECT_EQ(sc::char_poly(a), sc::from_roots(roots));
}
