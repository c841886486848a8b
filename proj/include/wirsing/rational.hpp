#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wirsing {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator. Throws DomainError on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "7", "-3/4", "1.25", "1e-4", "2.5e3".
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// 2^k for any integer k.
Rational pow2(long k);
/// 10^k for any integer k.
Rational pow10(long k);

/// Floor of log2|q| for q != 0.
long floor_log2(const Rational& q);

bool is_perfect_square(const Integer& z);

/// "p/q" or "p".
std::string to_string(const Rational& q);

/// Decimal expansion of q with `digits` fractional digits, rounded toward -inf (down) or +inf (up).
std::string to_decimal_down(const Rational& q, int digits);
std::string to_decimal_up(const Rational& q, int digits);

}  // namespace wirsing
