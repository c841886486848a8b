#pragma once

// 128-bit fixed-point fractional parts used by the fast candidate scans.

#include <algorithm>

#include "wirsing/target.hpp"

namespace wirsing::detail {

using u128 = unsigned __int128;

/// floor(frac(xi^j) * 2^128) computed from a 2^-160 lower enclosure. The true scaled
/// fractional part lies in [F, F + 1 + 2^-32) modulo 2^128.
inline u128 scaled_fraction(const TargetNumber& xi, unsigned j) {
  Rational lo = xi.power(j, 160).lo();
  Rational frac = lo - Rational(floor(lo));
  Integer scaled = floor(frac * pow2(128));
  Integer low = scaled % (Integer(1) << 64);
  Integer high = scaled >> 64;
  u128 out = static_cast<u128>(mpz_get_ui(high.get_mpz_t())) << 64;
  out |= static_cast<u128>(mpz_get_ui(low.get_mpz_t()));
  return out;
}

/// Circular distance to 0 modulo 2^128.
inline u128 circular(u128 v) { return std::min(v, static_cast<u128>(-v)); }

inline u128 saturating_add(u128 a, u128 b) {
  u128 s = a + b;
  return s < a ? ~static_cast<u128>(0) : s;
}

}  // namespace wirsing::detail
