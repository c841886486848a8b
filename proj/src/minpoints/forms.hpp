#pragma once

// Certified evaluation and exact comparison of integer forms c_0 + c_1 xi + ... + c_k xi^k.

#include <map>
#include <optional>
#include <vector>

#include "wirsing/interval.hpp"
#include "wirsing/target.hpp"

namespace wirsing::detail {

using Form = std::vector<Integer>;

/// Not thread-safe: keep one per worker. Caches enclosures of xi^j.
class FormEvaluator {
 public:
  FormEvaluator(const TargetNumber& xi, long max_bits);

  const TargetNumber& target() const { return xi_; }
  long max_bits() const { return max_bits_; }

  /// xi^j with width <= 2^-bits.
  const RealInterval& power(unsigned j, long bits);
  /// Signed value of the form with width <= 2^-bits.
  RealInterval value(const Form& c, long bits);
  /// |value| with relative width below 2^-rel_bits (or absolute 2^-max_bits when tiny).
  RealInterval abs_value(const Form& c, long rel_bits = 40);

  /// Reduced representation up to sign when the target's nature allows exact identities:
  /// coefficients modulo the minimal polynomial, or the form itself for transcendental
  /// targets. Two forms have equal |value| exactly iff their canonical forms agree.
  std::optional<std::vector<Rational>> canonical(const Form& c);
  /// true / false when decidable from the target's nature, nullopt otherwise.
  std::optional<bool> is_exact_zero(const Form& c);

  /// Sign of |a| - |b|. Throws PrecisionError when the cap is reached undecided.
  int compare_abs(const Form& a, const Form& b);
  /// Sign of max_i |a_i| - max_j |b_j|.
  int compare_max_abs(const std::vector<Form>& a, const std::vector<Form>& b);
  /// Index of the largest |a_i| (first one among exact ties).
  std::size_t argmax_abs(const std::vector<Form>& a);

  /// Nearest integer to q * xi^j (ties to even), certified.
  Integer nearest_multiple(const Integer& q, unsigned j);
  /// Nearest integer to -(a_1 xi + ... + a_n xi^n), given a with a_0 ignored.
  Integer nearest_constant(const Form& a);

 private:
  const TargetNumber& xi_;
  long max_bits_;
  std::vector<std::pair<long, RealInterval>> powers_;  // best enclosure per exponent
  std::optional<IntPolynomial> minpoly_;
  std::vector<std::vector<Rational>> reduced_powers_;
};

/// Certified minimum of |a_0 + a_1 xi + ... + a_n xi^n| over forms of height exactly H.
struct ShellMinimum {
  Form coeffs;
  long height = 0;
  bool exact_zero = false;
  /// Another form of the same height attains the same value.
  bool tie = false;
};

/// One entry per height 1 .. h_max (stopping after the first exactly vanishing shell when
/// stop_at_zero is set).
std::vector<ShellMinimum> shell_minima(FormEvaluator& ev, int n, long h_max, unsigned jobs, bool stop_at_zero);

/// Nearest integer with ties to even.
Integer round_half_even(const Rational& q);

/// Integer part of the interval's midpoint when every point of it rounds to the same
/// integer (half-integers excluded unless the interval is a point).
std::optional<Integer> certain_nearest(const RealInterval& v);

}  // namespace wirsing::detail
