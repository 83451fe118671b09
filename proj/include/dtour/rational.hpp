#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dtour {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and optional leading sign; throws ParseError.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q)
{
    return sgn(q);
}

}  // namespace dtour
