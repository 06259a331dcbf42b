#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace superpi {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense exact vector; length is the ambient dimension.
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_zero(const Vector& v);

} // namespace superpi
