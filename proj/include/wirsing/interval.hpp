#pragma once

#include <optional>
#include <string>

#include "wirsing/rational.hpp"

namespace wirsing {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// Every operation returns an enclosure of the exact image: for all x in a and
/// y in b, x op y lies in (a op b). Endpoints stay exact rationals; callers that
/// iterate should call `rounded_outward` to keep denominators bounded.
class RealInterval {
 public:
  RealInterval() = default;
  explicit RealInterval(const Rational& point) : lo_(point), hi_(point) {}
  RealInterval(const Rational& lo, const Rational& hi);

  static RealInterval from_int(long v) { return RealInterval(Rational(v)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool positive() const { return lo_ > 0; }
  bool negative() const { return hi_ < 0; }
  bool overlaps(const RealInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  /// Endpoints moved outward to multiples of 2^-bits.
  RealInterval rounded_outward(long bits) const;

  RealInterval abs() const;
  RealInterval square() const;
  RealInterval pow(unsigned k) const;
  RealInterval reciprocal() const;

  RealInterval& operator+=(const RealInterval& o);
  RealInterval& operator-=(const RealInterval& o);
  RealInterval& operator*=(const RealInterval& o);
  RealInterval& operator/=(const RealInterval& o);

  friend RealInterval operator-(const RealInterval& a) { return RealInterval(-a.hi_, -a.lo_); }
  friend RealInterval operator+(RealInterval a, const RealInterval& b) { return a += b; }
  friend RealInterval operator-(RealInterval a, const RealInterval& b) { return a -= b; }
  friend RealInterval operator*(RealInterval a, const RealInterval& b) { return a *= b; }
  friend RealInterval operator/(RealInterval a, const RealInterval& b) { return a /= b; }
  friend bool operator==(const RealInterval& a, const RealInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  friend RealInterval hull(const RealInterval& a, const RealInterval& b);
  friend RealInterval max(const RealInterval& a, const RealInterval& b);
  friend RealInterval min(const RealInterval& a, const RealInterval& b);

 private:
  Rational lo_{0};
  Rational hi_{0};
};

inline RealInterval operator+(const RealInterval& a, long b) { return a + RealInterval::from_int(b); }
inline RealInterval operator-(const RealInterval& a, long b) { return a - RealInterval::from_int(b); }
inline RealInterval operator*(long a, const RealInterval& b) { return RealInterval::from_int(a) * b; }
inline RealInterval operator-(long a, const RealInterval& b) { return RealInterval::from_int(a) - b; }
inline RealInterval operator+(long a, const RealInterval& b) { return RealInterval::from_int(a) + b; }
inline RealInterval operator*(const RealInterval& a, long b) { return a * RealInterval::from_int(b); }
inline RealInterval operator/(const RealInterval& a, long b) { return a / RealInterval::from_int(b); }
inline RealInterval operator/(long a, const RealInterval& b) { return RealInterval::from_int(a) / b; }

/// true iff every point of a is < every point of b.
inline bool certainly_less(const RealInterval& a, const RealInterval& b) { return a.hi() < b.lo(); }

/// Enclosure of sqrt over a. Width is at most target_width beyond the spread forced by a itself.
/// Exact when an endpoint is the square of a rational. Throws DomainError if a.lo < 0.
RealInterval sqrt(const RealInterval& a, const Rational& target_width);
/// sqrt with target width 2^-bits.
RealInterval sqrt_bits(const RealInterval& a, long bits);

/// Enclosure of the natural logarithm over a (a.lo > 0), each endpoint accurate to 2^-bits.
RealInterval log(const RealInterval& a, long bits);

/// Truncated decimal (toward zero) with `digits` fractional digits, present only when both
/// endpoints agree on every printed digit.
std::optional<std::string> truncated_decimal(const RealInterval& a, int digits);

/// "[lo, hi]" with outward decimal rounding to `digits` fractional digits.
std::string to_decimal_interval(const RealInterval& a, int digits);

/// "[lo, hi]" in scientific notation with `significant` digits, rounded outward.
std::string to_scientific_interval(const RealInterval& a, int significant);

/// One endpoint in scientific notation, rounded down (round_up = false) or up.
std::string to_scientific(const Rational& q, int significant, bool round_up);

std::string to_string(const RealInterval& a);

}  // namespace wirsing
