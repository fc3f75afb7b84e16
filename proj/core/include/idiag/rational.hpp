#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace idiag {

using Rational = mpq_class;

/// Signed exact vector. Used for directions, weights before validation and
/// anything that is not constrained to the nonnegative orthant.
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q > 0). Throws Error(SyntaxError).
Rational parse_rational(std::string_view text);

/// Canonical form: lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

Rational dot(const Vector& a, const Vector& b);

/// "(1, 2/3, 0)"
std::string to_string(const Vector& v);

/// Parses a comma separated list such as "1,1" or "-1, -1/2".
Vector parse_vector(std::string_view text);

}  // namespace idiag
