#pragma once

// Test-only reference computations. Everything here is written independently of the
// library code paths it is used to check.

#include <cstdint>
#include <vector>

#include "wirsing/rational.hpp"

namespace oracle {

using wirsing::Integer;
using wirsing::Rational;

/// [lo, hi] with lo^2 <= x <= hi^2 and hi - lo <= width, by plain rational bisection.
inline std::pair<Rational, Rational> bisect_sqrt(const Rational& x, const Rational& width) {
  Rational lo = 0;
  Rational hi = x > 1 ? x : Rational(1);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

/// Continued-fraction expansion of (p + sqrt(d)) / q for a non-square d and q | d - p^2.
/// Returns convergent denominators up to `limit`.
inline std::vector<Integer> quadratic_convergent_denominators(Integer p, Integer d, Integer q, const Integer& limit) {
  std::vector<Integer> out;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
  // Normalize so that q divides d - p^2.
  Integer t = d - p * p;
  if (t % q != 0) {
    p *= abs(q);
    d *= q * q;
    q *= abs(q);
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
  }
  Integer q_prev = 0;
  Integer q_cur = 1;
  for (int guard = 0; guard < 10000; ++guard) {
    // a = floor((p + sqrt d) / q), exact for either sign of q.
    Integer a;
    Integer numer_lo = p + s;  // floor(p + sqrt d) since d is not a square
    if (q > 0) {
      mpz_fdiv_q(a.get_mpz_t(), numer_lo.get_mpz_t(), q.get_mpz_t());
    } else {
      Integer numer_hi = p + s + 1;  // ceil(p + sqrt d)
      mpz_fdiv_q(a.get_mpz_t(), numer_hi.get_mpz_t(), q.get_mpz_t());
    }
    if (guard > 0) {
      Integer q_next = a * q_cur + q_prev;
      if (q_next > limit) break;
      q_prev = q_cur;
      q_cur = q_next;
    }
    if (out.empty() || out.back() != q_cur) out.push_back(q_cur);
    p = a * q - p;
    q = (d - p * p) / q;
  }
  return out;
}

/// Distance from x to the nearest integer.
inline Rational dist_to_int(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational a = x - Rational(f);
  Rational b = 1 - a;
  return a < b ? a : b;
}

/// Nearest integer (ties to even).
inline Integer nearest(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational frac = x - Rational(f);
  if (frac > wirsing::make_rational(1, 2)) return f + 1;
  if (frac < wirsing::make_rational(1, 2)) return f;
  return f % 2 == 0 ? f : Integer(f + 1);
}

/// Rank of an integer matrix by Gaussian elimination over the rationals.
inline int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[static_cast<std::size_t>(rank)][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[static_cast<std::size_t>(rank)][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
