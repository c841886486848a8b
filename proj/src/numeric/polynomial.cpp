#include "wirsing/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "wirsing/errors.hpp"

namespace wirsing {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  // q^d * p(num/q), evaluated homogeneously.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer qpow = 1;
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    qpow *= den;
    acc = acc * num + coeffs_[k] * qpow;
  }
  return sgn(acc);
}

RealInterval IntPolynomial::evaluate(const RealInterval& x) const {
  if (x.is_point()) return RealInterval(evaluate(x.lo()));
  RealInterval acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + RealInterval(Rational(*it));
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::without_content() const {
  Integer g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<Integer> c(coeffs_);
  for (Integer& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::primitive_part() const {
  IntPolynomial p = without_content();
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

Integer IntPolynomial::height() const {
  Integer h = 0;
  for (const Integer& c : coeffs_) {
    Integer a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> c(coeffs_);
  for (Integer& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& k, const IntPolynomial& p) {
  std::vector<Integer> c(p.coeffs_);
  for (Integer& v : c) v *= k;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || k == 0) out += a.get_str(10);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

// x^shift * p
IntPolynomial shifted(const IntPolynomial& p, std::size_t shift) {
  std::vector<Integer> c(shift, Integer(0));
  c.insert(c.end(), p.coefficients().begin(), p.coefficients().end());
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  int delta = a.degree() - b.degree() + 1;
  const Integer lb = b.leading();
  IntPolynomial r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Integer lr = r.leading();
    auto k = static_cast<std::size_t>(r.degree() - b.degree());
    r = lb * r - lr * shifted(b, k);
    ++steps;
  }
  for (; steps < delta; ++steps) r = lb * r;
  return r;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  std::vector<Integer> r = a.coefficients();
  const Integer& lb = b.leading();
  const auto& bc = b.coefficients();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= qk * bc[j];
    q[k] = qk;
  }
  for (const Integer& v : r) {
    if (v != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : r.primitive_part();
  }
  return u.primitive_part();
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.degree() <= 0) return IntPolynomial{1};
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  auto q = divide_exact(p.primitive_part(), g);
  if (!q) throw Error("internal: gcd does not divide its argument");
  return q->primitive_part();
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative().without_content());
  while (chain.back().degree() > 0) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    int delta = a.degree() - b.degree() + 1;
    bool flip = b.leading() < 0 && delta % 2 == 1;
    // -rem(a, b) up to a positive factor.
    r = flip ? r : -r;
    chain.push_back(r.without_content());
  }
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const IntPolynomial& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace wirsing
