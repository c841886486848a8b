#include "wirsing/target.hpp"

#include <climits>
#include <fstream>
#include <sstream>

#include "wirsing/errors.hpp"

namespace wirsing {

std::string to_string(TargetKind k) {
  switch (k) {
    case TargetKind::QUADRATIC_IRRATIONAL:
      return "QUADRATIC_IRRATIONAL";
    case TargetKind::EXPLICIT_SERIES:
      return "EXPLICIT_SERIES";
    case TargetKind::DECIMAL_ORACLE:
      return "DECIMAL_ORACLE";
  }
  return "UNKNOWN";
}

long TargetNumber::max_bits() const { return LONG_MAX / 4; }

int TargetNumber::algebraic_degree() const {
  auto m = minimal_polynomial();
  return m ? m->degree() : 0;
}

std::vector<Rational> reduce_power(unsigned j, const IntPolynomial& m) {
  const int d = m.degree();
  if (d < 1) throw DomainError("reduce_power needs a polynomial of positive degree");
  std::vector<Rational> r(static_cast<std::size_t>(d), Rational(0));
  if (j < static_cast<unsigned>(d)) {
    r[j] = 1;
    return r;
  }
  r[0] = 1;
  // Multiply by x repeatedly, replacing x^d by -(m_0 + ... + m_{d-1} x^{d-1}) / m_d.
  for (unsigned step = 0; step < j; ++step) {
    Rational top = r[static_cast<std::size_t>(d - 1)];
    for (int i = d - 1; i > 0; --i) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i - 1)];
    r[0] = 0;
    if (top != 0) {
      for (int i = 0; i < d; ++i) {
        r[static_cast<std::size_t>(i)] -= top * make_rational(m.coefficient(static_cast<std::size_t>(i)), m.leading());
      }
    }
  }
  return r;
}

namespace {

long bit_length(const Rational& q) {
  if (q == 0) return 0;
  long b = floor_log2(q);
  return b < 0 ? 0 : b + 1;
}

}  // namespace

RealInterval TargetNumber::power(unsigned j, long bits) const {
  if (j == 0) return RealInterval(Rational(1));
  if (auto m = minimal_polynomial(); m && m->degree() >= 1) {
    std::vector<Rational> r = reduce_power(j, *m);
    Rational scale = 0;
    for (const Rational& c : r) scale += abs(c);
    RealInterval sum(r[0]);
    if (r.size() == 1) return sum;
    // All higher terms share one enclosure of xi.
    long extra = bit_length(scale) + static_cast<long>(r.size()) + 2;
    RealInterval x = enclose(bits + extra);
    RealInterval xp(Rational(1));
    for (std::size_t i = 1; i < r.size(); ++i) {
      xp = xp * x;
      if (r[i] != 0) sum += RealInterval(r[i]) * xp;
    }
    if (sum.width() <= pow2(-bits)) return sum;
    // Fall through to the generic path for very wide leading terms.
  }
  RealInterval x0 = enclose(8);
  Rational mag = abs(x0.lo()) > abs(x0.hi()) ? abs(x0.lo()) : abs(x0.hi());
  long extra = static_cast<long>(j) * (bit_length(mag) + 1) + 8;
  for (;;) {
    RealInterval p = enclose(bits + extra).pow(j);
    if (p.width() <= pow2(-bits)) return p;
    extra *= 2;
  }
}

std::string TargetNumber::digits(int precision) const {
  for (long bits = static_cast<long>(precision * 3.33) + 16;; bits *= 2) {
    if (auto s = truncated_decimal(enclose(std::min(bits, max_bits())), precision)) return *s;
    if (bits >= max_bits()) throw PrecisionError("target digits exhausted; raise the oracle precision");
  }
}

namespace {

// ---------------------------------------------------------------------------

class QuadraticTarget final : public TargetNumber {
 public:
  QuadraticTarget(long a, long b, long c, std::string label)
      : a_(a), b_(b), c_(c), disc_(Integer(b) * b - 4 * Integer(a) * c), label_(std::move(label)) {
    if (a == 0) throw DomainError("quadratic target needs a != 0");
    if (disc_ <= 0) throw DomainError("quadratic target needs a positive discriminant");
    if (is_perfect_square(disc_)) throw DomainError("quadratic target has rational roots");
    poly_ = IntPolynomial(std::vector<Integer>{Integer(c), Integer(b), Integer(a)}).primitive_part();
    RealInterval x = enclose(40);
    Rational bound = root_bound(poly_);
    for (const AlgebraicReal& r : isolate_real_roots(poly_, RealInterval(-bound, bound))) {
      if (r.isolating_interval().overlaps(x)) alg_ = r;
    }
    if (!alg_) throw Error("internal: quadratic target root not found");
  }

  TargetKind kind() const override { return TargetKind::QUADRATIC_IRRATIONAL; }
  std::string describe() const override { return label_; }

  RealInterval enclose(long bits) const override {
    // larger root (-b + sqrt D) / (2a) when a > 0, (-b - sqrt D) / (2a) when a < 0
    const Rational two_a = Rational(2 * a_);
    long extra = 2;
    for (;;) {
      RealInterval s = sqrt_bits(RealInterval(Rational(disc_)), bits + extra);
      RealInterval num = a_ > 0 ? RealInterval(Rational(-b_)) + s : RealInterval(Rational(-b_)) - s;
      RealInterval r = num / RealInterval(two_a);
      if (r.width() <= pow2(-bits)) return r;
      ++extra;
    }
  }

  std::optional<IntPolynomial> minimal_polynomial() const override { return poly_; }
  std::optional<AlgebraicReal> algebraic() const override { return alg_; }

 private:
  long a_, b_, c_;
  Integer disc_;
  std::string label_;
  IntPolynomial poly_;
  std::optional<AlgebraicReal> alg_;
};

// ---------------------------------------------------------------------------

class LiouvilleTarget final : public TargetNumber {
 public:
  explicit LiouvilleTarget(long base) : base_(base) {
    if (base < 2) throw DomainError("Liouville base must be at least 2");
  }
  TargetKind kind() const override { return TargetKind::EXPLICIT_SERIES; }
  std::string describe() const override { return "liouville:" + std::to_string(base_); }
  bool known_transcendental() const override { return true; }

  RealInterval enclose(long bits) const override {
    // The tail after K terms is below 2 base^-(K+1)!.
    const Rational target = pow2(-bits);
    int K = 1;
    Integer fact = 2;  // (K+1)!
    for (;;) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(base_).get_mpz_t(), fact.get_ui());
      Rational tail = make_rational(2, p);
      if (tail <= target) return RealInterval(liouville_partial_sum(base_, K), liouville_partial_sum(base_, K) + tail);
      ++K;
      fact *= K + 1;
      if (fact > Integer(1L << 40)) throw PrecisionError("Liouville enclosure too fine");
    }
  }

 private:
  long base_;
};

// ---------------------------------------------------------------------------

class ETarget final : public TargetNumber {
 public:
  TargetKind kind() const override { return TargetKind::EXPLICIT_SERIES; }
  std::string describe() const override { return "e"; }
  bool known_transcendental() const override { return true; }
  RealInterval enclose(long bits) const override {
    const long w = bits + 16;
    RealInterval sum(Rational(1));
    RealInterval term(Rational(1));
    for (long k = 1;; ++k) {
      term = (term / RealInterval(Rational(k))).rounded_outward(w);
      sum = (sum + term).rounded_outward(w);
      // remaining terms sum to at most 2 term / (k + 1)
      Rational tail = term.hi() * make_rational(2, k + 1);
      if (tail < pow2(-(bits + 2)) && sum.width() < pow2(-(bits + 1))) {
        return RealInterval(sum.lo(), sum.hi() + tail);
      }
    }
  }
};

// atan(1/x) for integer x >= 2 with width below 2^-bits.
RealInterval atan_inv(long x, long bits) {
  const long w = bits + 16;
  const RealInterval x2(Rational(x * x));
  RealInterval power = RealInterval(make_rational(1, x));
  RealInterval sum;
  for (long k = 0;; ++k) {
    RealInterval term = (power / RealInterval(Rational(2 * k + 1))).rounded_outward(w);
    sum = k % 2 == 0 ? (sum + term).rounded_outward(w) : (sum - term).rounded_outward(w);
    power = (power / x2).rounded_outward(w);
    // alternating series: the error is bounded by the next term
    Rational next = power.hi() / (2 * k + 3);
    if (next < pow2(-(bits + 2))) return RealInterval(sum.lo() - next, sum.hi() + next);
  }
}

class PiTarget final : public TargetNumber {
 public:
  TargetKind kind() const override { return TargetKind::EXPLICIT_SERIES; }
  std::string describe() const override { return "pi"; }
  bool known_transcendental() const override { return true; }
  RealInterval enclose(long bits) const override {
    // pi = 16 atan(1/5) - 4 atan(1/239)
    return 16 * atan_inv(5, bits + 6) - 4 * atan_inv(239, bits + 4);
  }
};

// ---------------------------------------------------------------------------

class DecimalTarget final : public TargetNumber {
 public:
  DecimalTarget(Integer mantissa, long exponent, std::string label)
      : value_(Rational(mantissa) * pow10(exponent)), ulp_(pow10(exponent)), label_(std::move(label)) {
    // 2 ulp <= 2^-max_bits
    max_bits_ = -floor_log2(2 * ulp_) - 1;
    if (max_bits_ < 1) max_bits_ = 1;
  }
  TargetKind kind() const override { return TargetKind::DECIMAL_ORACLE; }
  std::string describe() const override { return label_; }
  long max_bits() const override { return max_bits_; }
  RealInterval enclose(long bits) const override {
    if (bits > max_bits_) {
      throw PrecisionError("decimal oracle '" + label_ + "' has too few digits for 2^-" + std::to_string(bits) +
                           "; raise the oracle precision");
    }
    // Supplied digits may be truncated or rounded, so allow one unit either way.
    return RealInterval(value_ - ulp_, value_ + ulp_);
  }

 private:
  Rational value_;
  Rational ulp_;
  std::string label_;
  long max_bits_;
};

class CallableTarget final : public TargetNumber {
 public:
  CallableTarget(std::string label, std::function<RealInterval(long)> f, long max_bits)
      : label_(std::move(label)), f_(std::move(f)), max_bits_(max_bits) {}
  TargetKind kind() const override { return TargetKind::DECIMAL_ORACLE; }
  std::string describe() const override { return label_; }
  long max_bits() const override { return max_bits_; }
  RealInterval enclose(long bits) const override {
    if (bits > max_bits_) throw PrecisionError("oracle '" + label_ + "' precision exhausted; raise the oracle precision");
    RealInterval r = f_(bits);
    if (r.width() > pow2(-bits)) throw Error("oracle '" + label_ + "' returned an enclosure wider than requested");
    return r;
  }

 private:
  std::string label_;
  std::function<RealInterval(long)> f_;
  long max_bits_;
};

long parse_long(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError("malformed integer '" + s + "' in target spec '" + spec + "'");
  }
}

}  // namespace

Rational liouville_partial_sum(long base, int K) {
  Rational s = 0;
  Integer fact = 1;
  for (int k = 1; k <= K; ++k) {
    fact *= k;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(base).get_mpz_t(), fact.get_ui());
    s += make_rational(1, p);
  }
  return s;
}

TargetPtr make_quadratic(long a, long b, long c) {
  return std::make_shared<QuadraticTarget>(a, b, c,
                                           "quad:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
}

TargetPtr make_golden() { return std::make_shared<QuadraticTarget>(1, -1, -1, "golden"); }

TargetPtr make_sqrt(long k) {
  if (k <= 0) throw DomainError("sqrt target needs a positive integer");
  return std::make_shared<QuadraticTarget>(1, 0, -k, "sqrt:" + std::to_string(k));
}

TargetPtr make_liouville(long base) { return std::make_shared<LiouvilleTarget>(base); }
TargetPtr make_e() { return std::make_shared<ETarget>(); }
TargetPtr make_pi() { return std::make_shared<PiTarget>(); }

TargetPtr make_decimal(const std::string& digits, long exponent, const std::string& label) {
  std::string d;
  for (char ch : digits) {
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '_') continue;
    d += ch;
  }
  if (d.empty()) throw InputError("decimal oracle has no digits");
  Integer mantissa;
  if (mantissa.set_str(d, 10) != 0) throw InputError("decimal oracle digits are malformed");
  return std::make_shared<DecimalTarget>(mantissa, exponent, label.empty() ? "decimal" : label);
}

TargetPtr load_decimal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open decimal oracle file '" + path + "'");
  std::string digits, exponent;
  if (!std::getline(in, digits) || !std::getline(in, exponent)) {
    throw InputError("decimal oracle file '" + path + "' needs a digits line and an exponent line");
  }
  while (!exponent.empty() && (exponent.back() == '\r' || exponent.back() == ' ')) exponent.pop_back();
  return make_decimal(digits, parse_long(exponent, path), "decimal:" + path);
}

TargetPtr make_callable(std::string label, std::function<RealInterval(long)> enclose, long max_bits) {
  return std::make_shared<CallableTarget>(std::move(label), std::move(enclose), max_bits);
}

TargetPtr parse_target(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (spec == "golden") return make_golden();
  if (spec == "e") return make_e();
  if (spec == "pi") return make_pi();
  if (head == "liouville") return make_liouville(arg.empty() ? 10 : parse_long(arg, spec));
  if (head == "sqrt" && colon != std::string::npos) return make_sqrt(parse_long(arg, spec));
  if (colon == std::string::npos && spec.rfind("sqrt", 0) == 0 && spec.size() > 4) {
    return make_sqrt(parse_long(spec.substr(4), spec));
  }
  if (head == "quad") {
    std::vector<long> v;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_long(item, spec));
    if (v.size() != 3) throw InputError("quad target needs three coefficients: quad:<a>,<b>,<c>");
    return make_quadratic(v[0], v[1], v[2]);
  }
  if (head == "decimal" && !arg.empty()) return load_decimal_file(arg);
  throw InputError("unknown target spec '" + spec +
                   "' (expected golden, sqrt:<k>, quad:<a>,<b>,<c>, liouville[:<base>], e, pi or decimal:<file>)");
}

}  // namespace wirsing
