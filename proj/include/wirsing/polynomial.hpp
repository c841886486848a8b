#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "wirsing/interval.hpp"
#include "wirsing/rational.hpp"

namespace wirsing {

/// Univariate polynomial with arbitrary-size integer coefficients, lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  /// Sign of p(x) computed with integer arithmetic only.
  int sign_at(const Rational& x) const;
  /// Horner enclosure; not tight for wide intervals.
  RealInterval evaluate(const RealInterval& x) const;

  IntPolynomial derivative() const;
  /// gcd of the coefficients, positive (zero for the zero polynomial).
  Integer content() const;
  /// Divided by its content, sign preserved.
  IntPolynomial without_content() const;
  /// Divided by its content and normalized to a positive leading coefficient.
  IntPolynomial primitive_part() const;
  /// Naive height: max |coefficient|.
  Integer height() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b. Requires b nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b over the integers when b divides a exactly.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (zero iff both inputs are zero).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... with positive scalings only.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Number of sign changes of the chain at x (zeros skipped).
int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& x);

}  // namespace wirsing
