#include "forms.hpp"

#include <algorithm>

#include "wirsing/errors.hpp"

namespace wirsing::detail {

namespace {

long bit_length(const Integer& z) { return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

}  // namespace

Integer round_half_even(const Rational& q) {
  Integer f = floor(q);
  Rational frac = q - Rational(f);
  const Rational half = make_rational(1, 2);
  if (frac > half) return f + 1;
  if (frac < half) return f;
  return (f % 2 == 0) ? f : Integer(f + 1);
}

std::optional<Integer> certain_nearest(const RealInterval& v) {
  if (v.is_point()) return round_half_even(v.lo());
  const Rational half = make_rational(1, 2);
  Integer a = floor(v.lo() + half);
  Integer b = floor(v.hi() + half);
  if (a != b) return std::nullopt;
  // A half-integer endpoint would make the rounding depend on the exact value.
  if (Rational(a) - half == v.lo() || Rational(b) + half == v.hi()) return std::nullopt;
  return a;
}

FormEvaluator::FormEvaluator(const TargetNumber& xi, long max_bits)
    : xi_(xi), max_bits_(std::min(max_bits, xi.max_bits())), minpoly_(xi.minimal_polynomial()) {}

const RealInterval& FormEvaluator::power(unsigned j, long bits) {
  if (powers_.size() <= j) powers_.resize(j + 1, {-1, RealInterval()});
  auto& slot = powers_[j];
  if (slot.first < bits) {
    if (bits > xi_.max_bits()) throw PrecisionError("target precision exhausted; raise the oracle precision");
    // Over-provision so repeated slightly larger requests hit the cache.
    long want = std::max(bits, slot.first + slot.first / 2);
    want = std::min(want, xi_.max_bits());
    slot = {want, xi_.power(j, want)};
  }
  return slot.second;
}

RealInterval FormEvaluator::value(const Form& c, long bits) {
  const long spread = bit_length(Integer(static_cast<long>(c.size()))) + 1;
  RealInterval sum;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (k == 0) {
      sum += RealInterval(Rational(c[0]));
      continue;
    }
    sum += RealInterval(Rational(c[k])) * power(static_cast<unsigned>(k), bits + bit_length(c[k]) + spread);
  }
  return sum;
}

RealInterval FormEvaluator::abs_value(const Form& c, long rel_bits) {
  long bits = 96;
  for (;;) {
    RealInterval v = value(c, bits).abs();
    if (v.lo() > 0 && v.width() <= v.lo() * pow2(-rel_bits)) return v;
    if (v.is_point()) return v;
    if (bits >= max_bits_) {
      if (is_exact_zero(c).value_or(false)) return RealInterval(Rational(0));
      return v;
    }
    bits = std::min(bits * 2, max_bits_);
  }
}

std::optional<std::vector<Rational>> FormEvaluator::canonical(const Form& c) {
  std::vector<Rational> r;
  if (minpoly_ && minpoly_->degree() >= 1) {
    const auto d = static_cast<std::size_t>(minpoly_->degree());
    while (reduced_powers_.size() < c.size()) {
      reduced_powers_.push_back(reduce_power(static_cast<unsigned>(reduced_powers_.size()), *minpoly_));
    }
    r.assign(d, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      for (std::size_t i = 0; i < d; ++i) r[i] += Rational(c[k]) * reduced_powers_[k][i];
    }
  } else if (xi_.known_transcendental()) {
    for (const Integer& z : c) r.emplace_back(z);
  } else {
    return std::nullopt;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (!r.empty() && r.back() < 0) {
    for (Rational& q : r) q = -q;
  }
  return r;
}

std::optional<bool> FormEvaluator::is_exact_zero(const Form& c) {
  auto r = canonical(c);
  if (!r) return std::nullopt;
  return r->empty();
}

int FormEvaluator::compare_abs(const Form& a, const Form& b) {
  auto ca = canonical(a);
  auto cb = canonical(b);
  const bool exact = ca && cb;
  if (exact && *ca == *cb) return 0;
  for (long bits = 96;; bits *= 2) {
    long use = std::min(bits, max_bits_);
    RealInterval va = value(a, use).abs();
    RealInterval vb = value(b, use).abs();
    if (va.hi() < vb.lo()) return -1;
    if (vb.hi() < va.lo()) return 1;
    if (use >= max_bits_) {
      throw PrecisionError("could not separate two approximation errors within " + std::to_string(max_bits_) +
                           " bits; raise the precision cap or oracle precision");
    }
  }
}

std::size_t FormEvaluator::argmax_abs(const std::vector<Form>& a) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (compare_abs(a[i], a[best]) > 0) best = i;
  }
  return best;
}

int FormEvaluator::compare_max_abs(const std::vector<Form>& a, const std::vector<Form>& b) {
  return compare_abs(a[argmax_abs(a)], b[argmax_abs(b)]);
}

Integer FormEvaluator::nearest_multiple(const Integer& q, unsigned j) {
  for (long bits = 64 + bit_length(q);; bits *= 2) {
    long use = std::min(bits, max_bits_);
    RealInterval v = RealInterval(Rational(q)) * power(j, use + bit_length(q) + 2);
    if (auto r = certain_nearest(v)) return *r;
    if (use >= max_bits_) throw PrecisionError("nearest integer undecided; raise the oracle precision");
  }
}

Integer FormEvaluator::nearest_constant(const Form& a) {
  Form c = a;
  c[0] = 0;
  for (long bits = 64;; bits *= 2) {
    long use = std::min(bits, max_bits_);
    RealInterval v = -value(c, use);
    if (auto r = certain_nearest(v)) return *r;
    if (use >= max_bits_) throw PrecisionError("nearest integer undecided; raise the oracle precision");
  }
}

}  // namespace wirsing::detail
