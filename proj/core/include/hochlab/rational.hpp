#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hochlab {

// Exact scalars. mpq_class keeps every value in lowest terms with a positive
// denominator; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace hochlab
