#include "wirsing/interval.hpp"

#include <algorithm>
#include <array>

#include "wirsing/errors.hpp"

namespace wirsing {

RealInterval::RealInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

namespace {

// floor(q * 2^bits) / 2^bits and the ceiling counterpart.
Rational round_down(const Rational& q, long bits) {
  if (q.get_den() == 1) return q;
  Integer scaled;
  Integer num = q.get_num();
  Integer den = q.get_den();
  if (bits >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-bits));
  }
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational r = Rational(scaled) * pow2(-bits);
  return r;
}

Rational round_up(const Rational& q, long bits) { return -round_down(-q, bits); }

}  // namespace

RealInterval RealInterval::rounded_outward(long bits) const {
  RealInterval r;
  r.lo_ = round_down(lo_, bits);
  r.hi_ = round_up(hi_, bits);
  return r;
}

RealInterval RealInterval::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return -*this;
  return RealInterval(Rational(0), std::max(Rational(-lo_), hi_));
}

RealInterval RealInterval::square() const {
  RealInterval a = abs();
  return RealInterval(a.lo_ * a.lo_, a.hi_ * a.hi_);
}

RealInterval RealInterval::pow(unsigned k) const {
  if (k == 0) return RealInterval(Rational(1));
  if (k % 2 == 0) {
    RealInterval a = abs();
    Rational lo, hi;
    mpz_class nl, dl, nh, dh;
    mpz_pow_ui(nl.get_mpz_t(), a.lo_.get_num_mpz_t(), k);
    mpz_pow_ui(dl.get_mpz_t(), a.lo_.get_den_mpz_t(), k);
    mpz_pow_ui(nh.get_mpz_t(), a.hi_.get_num_mpz_t(), k);
    mpz_pow_ui(dh.get_mpz_t(), a.hi_.get_den_mpz_t(), k);
    return RealInterval(make_rational(nl, dl), make_rational(nh, dh));
  }
  // Odd powers are monotone.
  auto rpow = [k](const Rational& q) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), k);
    return make_rational(n, d);
  };
  return RealInterval(rpow(lo_), rpow(hi_));
}

RealInterval RealInterval::reciprocal() const {
  if (contains_zero()) throw DomainError("division by an interval containing zero");
  return RealInterval(1 / hi_, 1 / lo_);
}

RealInterval& RealInterval::operator+=(const RealInterval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

RealInterval& RealInterval::operator-=(const RealInterval& o) {
  lo_ -= o.hi_;
  hi_ -= o.lo_;
  return *this;
}

RealInterval& RealInterval::operator*=(const RealInterval& o) {
  if (is_point() && o.is_point()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  std::array<Rational, 4> p{lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  Rational lo = *mn;
  Rational hi = *mx;
  lo_ = lo;
  hi_ = hi;
  return *this;
}

RealInterval& RealInterval::operator/=(const RealInterval& o) {
  if (o.contains_zero()) throw DomainError("division by an interval containing zero");
  return *this *= o.reciprocal();
}

RealInterval hull(const RealInterval& a, const RealInterval& b) {
  return RealInterval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

RealInterval max(const RealInterval& a, const RealInterval& b) {
  return RealInterval(std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

RealInterval min(const RealInterval& a, const RealInterval& b) {
  return RealInterval(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
}

// ---------------------------------------------------------------------------
// sqrt

namespace {

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (is_perfect_square(x.get_num()) && is_perfect_square(x.get_den())) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    return make_rational(n, d);
  }
  return std::nullopt;
}

// floor(sqrt(x) * 2^k) / 2^k, or the exact root when x is a rational square.
Rational sqrt_down(const Rational& x, long k) {
  if (auto e = exact_sqrt(x)) return *e;
  Integer s = floor(x * pow2(2 * k));
  mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
  return Rational(s) * pow2(-k);
}

Rational sqrt_up(const Rational& x, long k) {
  if (auto e = exact_sqrt(x)) return *e;
  Integer c = ceil(x * pow2(2 * k));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), c.get_mpz_t());
  if (s * s != c) s += 1;
  return Rational(s) * pow2(-k);
}

}  // namespace

RealInterval sqrt_bits(const RealInterval& a, long bits) {
  if (a.lo() < 0) throw DomainError("sqrt of an interval with negative points");
  return RealInterval(sqrt_down(a.lo(), bits), sqrt_up(a.hi(), bits));
}

RealInterval sqrt(const RealInterval& a, const Rational& target_width) {
  if (target_width <= 0) throw DomainError("sqrt target width must be positive");
  // 2^-k <= target_width / 2 keeps each endpoint within half the budget.
  long k = 1 - floor_log2(target_width);
  if (k < 1) k = 1;
  return sqrt_bits(a, k);
}

// ---------------------------------------------------------------------------
// log

namespace {

// atanh(z) for a rational 0 <= z <= 1/3, enclosure width below 2^-bits.
RealInterval atanh_small(const Rational& z, long bits) {
  if (z == 0) return RealInterval(Rational(0));
  const long w = bits + 24;
  const Rational z2 = z * z;
  RealInterval z2i = RealInterval(z2).rounded_outward(w);
  RealInterval power = RealInterval(z).rounded_outward(w);
  RealInterval sum;
  const Rational eps = pow2(-(bits + 2));
  const Rational one_minus_z2 = 1 - z2;
  for (long k = 0;; ++k) {
    sum += (power / RealInterval(Rational(2 * k + 1))).rounded_outward(w);
    power = (power * z2i).rounded_outward(w);
    Rational tail = power.hi() / (Rational(2 * k + 3) * one_minus_z2);
    if (tail < eps) return RealInterval(sum.lo(), sum.hi() + tail);
  }
}

RealInterval ln2(long bits) { return 2 * atanh_small(make_rational(1, 3), bits + 1); }

RealInterval log_point(const Rational& x, long bits) {
  if (x <= 0) throw DomainError("log of a non-positive number");
  if (x == 1) return RealInterval(Rational(0));
  long k = floor_log2(x);
  Rational m = x * pow2(-k);  // 1 <= m < 2
  Rational z = (m - 1) / (m + 1);
  long kbits = 0;
  for (long a = k < 0 ? -k : k; a > 0; a >>= 1) ++kbits;
  RealInterval r = 2 * atanh_small(z, bits + 2);
  if (k != 0) r += RealInterval(Rational(k)) * ln2(bits + kbits + 2);
  return r;
}

}  // namespace

RealInterval log(const RealInterval& a, long bits) {
  if (a.lo() <= 0) throw DomainError("log of an interval with non-positive points");
  RealInterval lo = log_point(a.lo(), bits);
  if (a.is_point()) return lo;
  RealInterval hi = log_point(a.hi(), bits);
  return RealInterval(lo.lo(), hi.hi());
}

// ---------------------------------------------------------------------------
// decimal rendering

std::optional<std::string> truncated_decimal(const RealInterval& a, int digits) {
  const Rational scale = pow10(digits);
  auto trunc = [&](const Rational& q) {
    Rational s = q * scale;
    Integer t;
    mpz_tdiv_q(t.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return t;
  };
  Integer tl = trunc(a.lo());
  Integer th = trunc(a.hi());
  if (tl != th) return std::nullopt;
  bool negative = a.hi() < 0 || (a.lo() < 0 && tl < 0);
  if (a.lo() < 0 && a.hi() > 0 && tl == 0) negative = false;
  std::string s = Integer(abs(tl)).get_str(10);
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

std::string to_decimal_interval(const RealInterval& a, int digits) {
  return "[" + to_decimal_down(a.lo(), digits) + ", " + to_decimal_up(a.hi(), digits) + "]";
}

std::string to_scientific(const Rational& q, int significant, bool round_up) {
  if (q == 0) return "0";
  if (q < 0) return "-" + to_scientific(Rational(-q), significant, !round_up);
  // 10^e <= q < 10^(e+1)
  long e = static_cast<long>(static_cast<double>(floor_log2(q)) * 0.30102999566398120);
  while (pow10(e) > q) --e;
  while (pow10(e + 1) <= q) ++e;
  Rational scaled = q * pow10(significant - 1 - e);
  Integer m = round_up ? ceil(scaled) : floor(scaled);
  std::string digits = m.get_str(10);
  if (static_cast<int>(digits.size()) > significant) {  // rounding carried into a new digit
    ++e;
    digits.pop_back();
  }
  std::string mant = digits.substr(0, 1);
  if (digits.size() > 1) mant += "." + digits.substr(1);
  return mant + "e" + (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
}

std::string to_scientific_interval(const RealInterval& a, int significant) {
  return "[" + to_scientific(a.lo(), significant, false) + ", " + to_scientific(a.hi(), significant, true) + "]";
}

std::string to_string(const RealInterval& a) {
  return "[" + to_string(a.lo()) + ", " + to_string(a.hi()) + "]";
}

}  // namespace wirsing
