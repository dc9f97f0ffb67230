#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pkaeq {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "int" or "int/posint" (optional leading '-').
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace pkaeq
