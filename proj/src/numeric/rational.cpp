#include "wirsing/rational.hpp"

#include <cctype>

#include "wirsing/errors.hpp"

namespace wirsing {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InputError("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed number: '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InputError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    value = make_rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      Integer ev = parse_integer(exp_part, text);
      if (!ev.fits_slong_p() || abs(ev) > 100000) throw InputError("exponent too large in '" + std::string(text) + "'");
      exponent = ev.get_si() * (exp_negative ? -1 : 1);
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = s.substr(0, dot);
      std::string_view frac_part = s.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) throw InputError("malformed number: '" + std::string(text) + "'");
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(s);
    }
    value = Rational(parse_integer(digits, text)) * pow10(exponent);
  }
  return negative ? Rational(-value) : value;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow2(long k) {
  Integer p = 1;
  if (k >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return make_rational(1, p);
}

Rational pow10(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k >= 0 ? k : -k));
  return k >= 0 ? Rational(p) : make_rational(1, p);
}

long floor_log2(const Rational& q) {
  if (q == 0) throw DomainError("floor_log2 of zero");
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // 2^(e-1) < |q| < 2^(e+1); settle the remaining bit exactly.
  Rational aq = abs(q);
  if (aq >= pow2(e)) return e;
  return e - 1;
}

bool is_perfect_square(const Integer& z) {
  if (z < 0) return false;
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

std::string fixed_from_scaled(const Integer& scaled, int digits) {
  bool negative = scaled < 0;
  std::string s = Integer(abs(scaled)).get_str(10);
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace

std::string to_decimal_down(const Rational& q, int digits) {
  return fixed_from_scaled(floor(q * pow10(digits)), digits);
}

std::string to_decimal_up(const Rational& q, int digits) {
  return fixed_from_scaled(ceil(q * pow10(digits)), digits);
}

}  // namespace wirsing
