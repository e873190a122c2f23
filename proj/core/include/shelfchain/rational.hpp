#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shelfchain {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace shelfchain
