#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "shelfchain/rational.hpp"
#include "shelfchain/tree.hpp"

namespace shelfchain {

/// Numeric values for the indeterminates x_E.
using Weights = std::map<LeafSet, Rational>;

/// An integer combination of the indeterminates x_E. Zero coefficients are
/// never stored.
class LinForm {
 public:
  using Terms = std::map<LeafSet, std::int64_t>;

  LinForm() = default;
  /// The single indeterminate x_E.
  static LinForm var(const LeafSet& set, std::int64_t coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(const LeafSet& set) const;

  void add(const LeafSet& set, std::int64_t coeff);
  LinForm& operator+=(const LinForm& other);
  LinForm& operator-=(const LinForm& other);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  LinForm operator-() const;

  /// Throws MissingWeight if a term has no weight.
  Rational evaluate(const Weights& w) const;

  /// "x_{1,4} + x_{2,4} - x_∅"; "0" for the zero form.
  std::string to_string() const;

  friend bool operator==(const LinForm&, const LinForm&) = default;
  friend auto operator<=>(const LinForm& a, const LinForm& b) { return a.terms_ <=> b.terms_; }

 private:
  Terms terms_;
};

/// Sum of x_E over all admissible sets of the tree.
LinForm total_form(const ShelfTree& tree);

}  // namespace shelfchain
