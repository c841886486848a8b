#pragma once

#include <vector>

#include "wirsing/polynomial.hpp"

namespace wirsing {

/// A real algebraic number: a square-free integer polynomial together with an interval
/// holding exactly one of its real roots.
///
/// Either the interval is a single rational point (an exact rational root), or the
/// polynomial is nonzero with opposite signs at the two endpoints.
class AlgebraicReal {
 public:
  AlgebraicReal(IntPolynomial polynomial, RealInterval isolating);

  static AlgebraicReal rational(const Rational& q);

  const IntPolynomial& polynomial() const { return poly_; }
  const RealInterval& isolating_interval() const { return iso_; }
  bool is_rational() const { return iso_.is_point(); }

  /// Same root, isolating width <= target_width.
  AlgebraicReal refined(const Rational& target_width) const;
  /// Enclosure of width <= 2^-bits.
  RealInterval enclosure(long bits) const { return refined(pow2(-bits)).isolating_interval(); }

 private:
  IntPolynomial poly_;
  RealInterval iso_;
};

/// Every distinct real root of p in the closed window, increasing, with disjoint
/// isolating intervals. Throws DomainError for the zero polynomial.
std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p, const RealInterval& window);

/// Refinement entry point with the same contract as AlgebraicReal::refined.
inline AlgebraicReal refine(const AlgebraicReal& a, const Rational& target_width) {
  return a.refined(target_width);
}

/// Cauchy bound: every root has |x| < bound.
Rational root_bound(const IntPolynomial& p);

/// Exact sign of a - b.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

}  // namespace wirsing
