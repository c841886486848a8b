#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wirsing/interval.hpp"
#include "wirsing/polynomial.hpp"
#include "wirsing/roots.hpp"

namespace wirsing {

enum class TargetKind { QUADRATIC_IRRATIONAL, EXPLICIT_SERIES, DECIMAL_ORACLE };

std::string to_string(TargetKind k);

/// A real number xi that can be enclosed to any requested width (up to max_bits()).
///
/// Implementations are immutable and safe to share between threads.
class TargetNumber {
 public:
  virtual ~TargetNumber() = default;

  virtual TargetKind kind() const = 0;
  /// Spec string that parse_target maps back to an equal target.
  virtual std::string describe() const = 0;
  /// Enclosure of xi of width <= 2^-bits. Throws PrecisionError past max_bits().
  virtual RealInterval enclose(long bits) const = 0;
  /// Largest precision enclose() supports.
  virtual long max_bits() const;
  /// Primitive minimal polynomial for algebraic targets.
  virtual std::optional<IntPolynomial> minimal_polynomial() const { return std::nullopt; }
  /// xi as an exact algebraic number, when it is one.
  virtual std::optional<AlgebraicReal> algebraic() const { return std::nullopt; }
  /// True when xi is proven transcendental (no polynomial relation can make two forms equal).
  virtual bool known_transcendental() const { return false; }

  /// Enclosure of xi^j of width <= 2^-bits. Algebraic targets reduce xi^j modulo the
  /// minimal polynomial, so rational powers come back as exact points.
  RealInterval power(unsigned j, long bits) const;
  /// Truncated decimal expansion with `precision` fractional digits.
  std::string digits(int precision) const;
  /// Degree of the minimal polynomial, or 0 when none is known.
  int algebraic_degree() const;
};

using TargetPtr = std::shared_ptr<const TargetNumber>;

/// x^j reduced modulo the polynomial m (coefficients of x^0 .. x^{deg m - 1}).
std::vector<Rational> reduce_power(unsigned j, const IntPolynomial& m);

/// Larger real root of a x^2 + b x + c with a non-square positive discriminant.
TargetPtr make_quadratic(long a, long b, long c);
TargetPtr make_golden();
/// sqrt(k) for a positive non-square k.
TargetPtr make_sqrt(long k);
/// sum_{k >= 1} base^(-k!), base >= 2.
TargetPtr make_liouville(long base);
TargetPtr make_e();
TargetPtr make_pi();
/// D * 10^exponent known to +- 10^exponent, where D is the integer spelled by `digits`.
TargetPtr make_decimal(const std::string& digits, long exponent, const std::string& label = "");
/// Reads a decimal oracle file: one line of digits, one line of exponent.
TargetPtr load_decimal_file(const std::string& path);
/// Arbitrary enclosure callback; declared DECIMAL_ORACLE.
TargetPtr make_callable(std::string label, std::function<RealInterval(long bits)> enclose,
                        long max_bits = 1L << 20);

/// Partial sum sum_{k=1}^{K} base^(-k!).
Rational liouville_partial_sum(long base, int K);

/// Parses golden | sqrt:<k> | sqrt<k> | quad:<a>,<b>,<c> | liouville[:<base>] | e | pi | decimal:<file>.
TargetPtr parse_target(const std::string& spec);

}  // namespace wirsing
