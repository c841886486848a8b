#include "wirsing/roots.hpp"

#include <utility>

#include "wirsing/errors.hpp"

namespace wirsing {

AlgebraicReal::AlgebraicReal(IntPolynomial polynomial, RealInterval isolating)
    : poly_(std::move(polynomial)), iso_(std::move(isolating)) {
  if (poly_.is_zero()) throw DomainError("algebraic number with zero polynomial");
  if (iso_.is_point()) {
    if (poly_.sign_at(iso_.lo()) != 0) throw DomainError("point interval is not a root");
  } else if (poly_.sign_at(iso_.lo()) * poly_.sign_at(iso_.hi()) >= 0) {
    throw DomainError("isolating interval without a sign change");
  }
}

AlgebraicReal AlgebraicReal::rational(const Rational& q) {
  IntPolynomial p(std::vector<Integer>{-q.get_num(), q.get_den()});
  return AlgebraicReal(std::move(p), RealInterval(q));
}

AlgebraicReal AlgebraicReal::refined(const Rational& target_width) const {
  if (iso_.is_point() || iso_.width() <= target_width) return *this;
  Rational lo = iso_.lo();
  Rational hi = iso_.hi();
  const int s_lo = poly_.sign_at(lo);
  while (hi - lo > target_width) {
    Rational mid = (lo + hi) / 2;
    int s = poly_.sign_at(mid);
    if (s == 0) return AlgebraicReal(poly_, RealInterval(mid));
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return AlgebraicReal(poly_, RealInterval(lo, hi));
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  Integer lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = make_rational(abs(p.coefficient(static_cast<std::size_t>(i))), lead);
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

class Isolator {
 public:
  explicit Isolator(IntPolynomial q) : q_(std::move(q)), chain_(sturm_sequence(q_)) {}

  int variations(const Rational& x) const { return sign_variations(chain_, x); }

  // Roots in (a, b]; va, vb are the Sturm variation counts at a and b.
  void process(const Rational& a, const Rational& b, int va, int vb, std::vector<AlgebraicReal>& out) const {
    int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
      if (q_.sign_at(b) == 0) {
        out.emplace_back(q_, RealInterval(b));
        return;
      }
      if (q_.sign_at(a) != 0) {
        out.emplace_back(q_, RealInterval(a, b));
        return;
      }
    }
    Rational m = split_point(a, b);
    int vm = variations(m);
    process(a, m, va, vm, out);
    process(m, b, vm, vb, out);
  }

 private:
  // An interior point of (a, b) that is not a root.
  Rational split_point(const Rational& a, const Rational& b) const {
    Rational m = (a + b) / 2;
    Rational step = (b - a) / 4;
    while (q_.sign_at(m) == 0) {
      m = (a + b) / 2 + step;
      step /= 2;
    }
    return m;
  }

  IntPolynomial q_;
  std::vector<IntPolynomial> chain_;
};

}  // namespace

std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p, const RealInterval& window) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  IntPolynomial q = square_free_part(p);
  std::vector<AlgebraicReal> out;
  if (q.degree() < 1) return out;
  const Rational& lo = window.lo();
  const Rational& hi = window.hi();
  if (q.sign_at(lo) == 0) out.emplace_back(q, RealInterval(lo));
  if (lo == hi) return out;
  Isolator iso(q);
  iso.process(lo, hi, iso.variations(lo), iso.variations(hi), out);
  // Neighbouring intervals from (a, m], (m, b] may touch at m; shrink until disjoint.
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].isolating_interval().hi() >= out[i + 1].isolating_interval().lo()) {
      if (!out[i].is_rational()) out[i] = out[i].refined(out[i].isolating_interval().width() / 2);
      if (!out[i + 1].is_rational()) out[i + 1] = out[i + 1].refined(out[i + 1].isolating_interval().width() / 2);
    }
  }
  return out;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal x = a;
  AlgebraicReal y = b;
  bool equality_ruled_out = false;
  for (;;) {
    const RealInterval& ix = x.isolating_interval();
    const RealInterval& iy = y.isolating_interval();
    if (ix.hi() < iy.lo()) return -1;
    if (iy.hi() < ix.lo()) return 1;
    if (ix.is_point() && iy.is_point()) return 0;
    if (!equality_ruled_out) {
      // Any common root inside the overlap is both a and b.
      IntPolynomial g = gcd(x.polynomial(), y.polynomial());
      if (g.degree() >= 1) {
        RealInterval overlap(std::max(ix.lo(), iy.lo()), std::min(ix.hi(), iy.hi()));
        if (!isolate_real_roots(g, overlap).empty()) return 0;
      }
      equality_ruled_out = true;
    }
    x = x.refined(ix.width() / 4);
    y = y.refined(iy.width() / 4);
  }
}

}  // namespace wirsing
