#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kcut {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator, which is the normal form all comparisons rely on.
using Rational = mpq_class;

/// Renders as "p/q", always with an explicit denominator ("5/1", "-3/2").
std::string to_string(const Rational& value);

/// Accepts an integer ("12"), a decimal ("0.25", converted exactly) or a
/// fraction ("3/4"). A leading '-' is accepted; callers enforce sign rules.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// p / q in lowest terms. mpq_class(p, q) alone does not reduce.
Rational ratio(long p, long q);

double to_double(const Rational& value);

/// Largest rational with denominator `den` that does not exceed `value`.
Rational floor_to_denominator(const Rational& value, unsigned long den);

}  // namespace kcut
