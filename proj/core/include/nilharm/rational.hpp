#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilharm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "numerator/denominator" form; integers keep the "/1".
std::string format_rational(const Rational& q);

/// Human-facing form: integers print without a denominator.
std::string format_rational_short(const Rational& q);

/// Accepts "p", "p/q" and optional leading sign; the result is canonicalized.
/// Throws ValidationError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);

}  // namespace nilharm
