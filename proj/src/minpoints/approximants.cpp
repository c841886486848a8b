#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "forms.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/minpoints.hpp"

namespace wirsing {

namespace {

using cld = std::complex<long double>;

long double to_ld(const Rational& q) {
  const double hi = q.get_d();
  const double lo = Rational(q - Rational(hi)).get_d();
  return static_cast<long double>(hi) + static_cast<long double>(lo);
}

std::vector<Integer> positive_divisors(Integer z) {
  z = abs(z);
  std::vector<Integer> small;
  std::vector<Integer> large;
  if (z == 0) return small;
  if (z > Integer("1000000000000")) return {Integer(1)};
  for (Integer d = 1; d * d <= z; ++d) {
    if (z % d == 0) {
      small.push_back(d);
      if (d * d != z) large.push_back(z / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// A rational r/s (s | lc) equal to the isolated root, when there is one.
std::optional<Rational> rational_value(const IntPolynomial& q, const AlgebraicReal& root) {
  if (root.is_rational()) return root.isolating_interval().lo();
  const Integer lc = abs(q.leading());
  const AlgebraicReal fine = root.refined(make_rational(1, 2 * lc * lc));
  const RealInterval& iso = fine.isolating_interval();
  if (iso.is_point()) return iso.lo();
  for (const Integer& s : positive_divisors(lc)) {
    Integer r = floor(iso.midpoint() * Rational(s) + make_rational(1, 2));
    Rational v = make_rational(r, s);
    if (iso.contains(v) && q.sign_at(v) == 0) return v;
  }
  return std::nullopt;
}

std::vector<cld> complex_roots(const IntPolynomial& p) {
  const int d = p.degree();
  std::vector<long double> c;
  const long double lead = to_ld(Rational(p.leading()));
  for (const Integer& z : p.coefficients()) c.push_back(to_ld(Rational(z)) / lead);
  long double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
  radius += 1;
  std::vector<cld> z(static_cast<std::size_t>(d));
  const cld seed(0.4L, 0.9L);
  for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i) * (radius / 2);
  auto eval = [&](cld x) {
    cld v = 1;
    for (int i = d - 1; i >= 0; --i) v = v * x + c[static_cast<std::size_t>(i)];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double moved = 0;
    for (int i = 0; i < d; ++i) {
      cld denom = 1;
      for (int j = 0; j < d; ++j) {
        if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      }
      cld step = eval(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

// True when g has a root inside the isolating interval of `root` (g divides root's polynomial).
bool vanishes_at(const IntPolynomial& g, const AlgebraicReal& root) {
  const RealInterval& iso = root.isolating_interval();
  if (iso.is_point()) return g.sign_at(iso.lo()) == 0;
  return g.sign_at(iso.lo()) * g.sign_at(iso.hi()) < 0;
}

// Factor of q of degree in [2, deg q - 2] vanishing at root, found from numerical roots.
std::optional<IntPolynomial> numeric_factor(const IntPolynomial& q, const AlgebraicReal& root) {
  const int d = q.degree();
  if (d > 16) return std::nullopt;
  const auto z = complex_roots(q);
  const long double a = to_ld(root.enclosure(80).midpoint());
  std::size_t anchor = 0;
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (std::abs(z[i] - a) < std::abs(z[anchor] - a)) anchor = i;
  }
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i != anchor) others.push_back(i);
  }
  const auto lcs = positive_divisors(q.leading());
  for (int size = 2; size <= d - 2; ++size) {
    for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
      if (__builtin_popcount(mask) != size - 1) continue;
      std::vector<cld> prod{cld(1)};
      auto mul = [&](cld r) {
        std::vector<cld> next(prod.size() + 1, cld(0));
        for (std::size_t i = 0; i < prod.size(); ++i) {
          next[i + 1] += prod[i];
          next[i] -= prod[i] * r;
        }
        prod = std::move(next);
      };
      mul(z[anchor]);
      for (std::size_t b = 0; b < others.size(); ++b) {
        if (mask & (1u << b)) mul(z[others[b]]);
      }
      for (const Integer& t : lcs) {
        const long double scale = to_ld(Rational(t));
        std::vector<Integer> coeffs;
        bool ok = true;
        for (const cld& c : prod) {
          cld v = c * scale;
          long double r = std::round(v.real());
          if (std::abs(v.imag()) > 1e-6L * (1 + std::abs(v)) || std::abs(v.real() - r) > 1e-6L * (1 + std::abs(r))) {
            ok = false;
            break;
          }
          coeffs.emplace_back(static_cast<long>(r));
        }
        if (!ok) continue;
        IntPolynomial g(coeffs);
        if (g.degree() != size) continue;
        if (divide_exact(q, g) && vanishes_at(g, root)) return g.primitive_part();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

IntPolynomial minimal_polynomial_of_root(const IntPolynomial& p, const AlgebraicReal& root, bool* certified) {
  if (certified) *certified = true;
  if (p.degree() < 1) throw DomainError("polynomial has no roots");
  IntPolynomial q = square_free_part(p);
  if (auto r = rational_value(q, root)) {
    return IntPolynomial(std::vector<Integer>{-r->get_num(), r->get_den()});
  }
  // Strip every rational root; what remains of degree <= 3 is irreducible.
  const RealInterval window(-root_bound(q), root_bound(q));
  for (const AlgebraicReal& other : isolate_real_roots(q, window)) {
    if (auto r = rational_value(q, other)) {
      IntPolynomial lin(std::vector<Integer>{-r->get_num(), r->get_den()});
      q = divide_exact(q, lin).value().primitive_part();
    }
  }
  if (q.degree() <= 3) return q;
  if (auto g = numeric_factor(q, root)) return minimal_polynomial_of_root(*g, root, certified);
  if (certified) *certified = false;
  return q;
}

namespace {

struct Candidate {
  AlgebraicReal alpha;
  Integer height;
  bool uncertified = false;
  bool exact_hit = false;
};

class DistanceOracle {
 public:
  DistanceOracle(const TargetNumber& xi, long cap) : xi_(xi), cap_(std::min(cap, 2048L)), exact_(xi.algebraic()) {}

  RealInterval distance(const AlgebraicReal& a, long bits) const {
    return (xi_.enclose(bits) - a.enclosure(bits)).abs();
  }

  bool hits(const AlgebraicReal& a) const { return exact_ && compare(a, *exact_) == 0; }

  /// Sign of |xi - a| - |xi - b|; 0 for equal numbers and for distances not separated at the cap.
  int compare_distance(const Candidate& a, const Candidate& b, bool* undecided) const {
    if (a.exact_hit || b.exact_hit) return static_cast<int>(b.exact_hit) - static_cast<int>(a.exact_hit);
    if (compare(a.alpha, b.alpha) == 0) return 0;
    for (long bits = 64;; bits *= 2) {
      const long use = std::min(bits, cap_);
      RealInterval da = distance(a.alpha, use);
      RealInterval db = distance(b.alpha, use);
      if (da.hi() < db.lo()) return -1;
      if (db.hi() < da.lo()) return 1;
      if (use >= cap_) {
        if (undecided) *undecided = true;
        return 0;
      }
    }
  }

  RealInterval certified_distance(const Candidate& c) const {
    if (c.exact_hit) return RealInterval(Rational(0));
    for (long bits = 64;; bits *= 2) {
      const long use = std::min(bits, cap_);
      RealInterval d = distance(c.alpha, use);
      if ((d.lo() > 0 && d.width() <= d.lo() * pow2(-30)) || use >= cap_) return d;
    }
  }

 private:
  const TargetNumber& xi_;
  long cap_;
  std::optional<AlgebraicReal> exact_;
};

// The root of p closest to xi, as a candidate with its minimal polynomial.
std::optional<Candidate> nearest_root_candidate(const IntPolynomial& p, const DistanceOracle& oracle) {
  if (p.degree() < 1) return std::nullopt;
  const IntPolynomial q = square_free_part(p);
  const Rational bound = root_bound(q);
  auto roots = isolate_real_roots(q, RealInterval(-bound, bound));
  if (roots.empty()) return std::nullopt;
  std::optional<Candidate> best;
  for (const auto& r : roots) {
    Candidate c{r, Integer(0)};
    c.exact_hit = oracle.hits(r);
    if (!best || oracle.compare_distance(c, *best, nullptr) < 0) best = c;
  }
  bool certified = true;
  IntPolynomial mp = minimal_polynomial_of_root(q, best->alpha, &certified);
  if (mp.degree() == 1) {
    best->alpha = AlgebraicReal::rational(make_rational(-mp.coefficient(0), mp.coefficient(1)));
  } else {
    best->alpha = AlgebraicReal(mp, best->alpha.isolating_interval());
  }
  best->height = mp.height();
  best->uncertified = !certified;
  return best;
}

std::vector<AlgebraicApproximant> records_from(std::vector<Candidate> cands, const DistanceOracle& oracle) {
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.height < b.height; });
  std::vector<AlgebraicApproximant> out;
  std::optional<Candidate> record;
  std::size_t i = 0;
  while (i < cands.size()) {
    const Integer h = cands[i].height;
    Candidate best = cands[i];
    bool tie = false;
    for (++i; i < cands.size() && cands[i].height == h; ++i) {
      bool undecided = false;
      const int cmp = oracle.compare_distance(cands[i], best, &undecided);
      if (cmp < 0) {
        best = cands[i];
        tie = false;
      } else if (cmp == 0 && (undecided || compare(cands[i].alpha, best.alpha) != 0)) {
        tie = true;
      }
    }
    if (record) {
      bool undecided = false;
      const int cmp = oracle.compare_distance(best, *record, &undecided);
      if (cmp > 0) continue;
      if (cmp == 0) {
        if (undecided || compare(best.alpha, record->alpha) != 0) out.back().tie = true;
        continue;
      }
    }
    AlgebraicApproximant a{best.alpha, best.height, oracle.certified_distance(best), best.exact_hit, best.uncertified,
                           tie};
    out.push_back(std::move(a));
    record = best;
    if (best.exact_hit) break;
  }
  return out;
}

// Degree one: the two best fractions of each height, exact.
std::vector<AlgebraicApproximant> rational_records(const TargetNumber& xi, long h_max, const ScanOptions& opt) {
  const long double x = to_ld(xi.enclose(128).midpoint());
  const long double ax = std::fabs(x);
  const long double ulp = std::ldexp(1.0L, -60);
  detail::FormEvaluator ev(xi, opt.max_bits);
  struct Frac {
    long p;
    long q;
    long double d;
  };
  auto margin = [&](const Frac& f) { return ulp * (ax + std::fabs(static_cast<long double>(f.p) / f.q) + 1); };
  // |xi - p/q| vs |xi - p'/q'| through q'(q xi - p) and q(q' xi - p').
  auto exact_cmp = [&](const Frac& a, const Frac& b) {
    detail::Form fa{Integer(-a.p) * b.q, Integer(a.q) * b.q};
    detail::Form fb{Integer(-b.p) * a.q, Integer(b.q) * a.q};
    return ev.compare_abs(fa, fb);
  };
  auto cmp = [&](const Frac& a, const Frac& b) {
    if (std::fabs(a.d - b.d) > 2 * (margin(a) + margin(b))) return a.d < b.d ? -1 : 1;
    if (a.p == b.p && a.q == b.q) return 0;
    return exact_cmp(a, b);
  };
  auto make = [&](long p, long q) { return Frac{p, q, std::fabs(x - static_cast<long double>(p) / q)}; };

  std::vector<AlgebraicApproximant> out;
  std::optional<Frac> record;
  for (long h = 1; h <= h_max; ++h) {
    std::vector<Frac> shell;
    // Denominator h, numerator in [-h, h].
    const long double target = x * h;
    long lo = static_cast<long>(std::max<long double>(-h, std::min<long double>(h, std::floor(target))));
    long hi = static_cast<long>(std::max<long double>(-h, std::min<long double>(h, std::ceil(target))));
    for (long p = lo; p >= -h; --p) {
      if (std::gcd(p, h) == 1) {
        shell.push_back(make(p, h));
        break;
      }
    }
    for (long p = hi; p <= h; ++p) {
      if (std::gcd(p, h) == 1) {
        shell.push_back(make(p, h));
        break;
      }
    }
    // Numerator +-h, denominator below h.
    if (h > 1 && ax > 0) {
      const long s = x < 0 ? -1 : 1;
      const long double qs = h / ax;
      long qlo = static_cast<long>(std::max<long double>(1, std::min<long double>(h - 1, std::floor(qs))));
      long qhi = static_cast<long>(std::max<long double>(1, std::min<long double>(h - 1, std::ceil(qs))));
      for (long q = qlo; q >= 1; --q) {
        if (std::gcd(h, q) == 1) {
          shell.push_back(make(s * h, q));
          break;
        }
      }
      for (long q = qhi; q <= h - 1; ++q) {
        if (std::gcd(h, q) == 1) {
          shell.push_back(make(s * h, q));
          break;
        }
      }
    }
    if (shell.empty()) continue;
    Frac best = shell[0];
    bool tie = false;
    for (std::size_t i = 1; i < shell.size(); ++i) {
      const int c = cmp(shell[i], best);
      if (c < 0) {
        best = shell[i];
        tie = false;
      } else if (c == 0 && (shell[i].p != best.p || shell[i].q != best.q)) {
        tie = true;
      }
    }
    if (record) {
      const int c = cmp(best, *record);
      if (c > 0) continue;
      if (c == 0) {
        if (best.p != record->p || best.q != record->q) out.back().tie = true;
        continue;
      }
    }
    record = best;
    Candidate c{AlgebraicReal::rational(make_rational(best.p, best.q)), Integer(h)};
    DistanceOracle oracle(xi, opt.max_bits);
    AlgebraicApproximant a{c.alpha, c.height, oracle.certified_distance(c), false, false, tie};
    out.push_back(std::move(a));
  }
  return out;
}

// Every irreducible polynomial of degree <= 2 and height <= h_max, filtered in double
// precision and certified exactly.
std::vector<Candidate> quadratic_candidates(const TargetNumber& xi, long h_max, const DistanceOracle& oracle) {
  const double x = xi.enclose(96).midpoint().get_d();
  struct Approx {
    long a, b, c;
    long h;
    double d;
  };
  std::vector<double> best(static_cast<std::size_t>(h_max) + 1, INFINITY);
  std::vector<Approx> all;
  for (long a = 0; a <= h_max; ++a) {
    for (long b = (a == 0 ? 1 : -h_max); b <= h_max; ++b) {
      for (long c = -h_max; c <= h_max; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        double d;
        if (a == 0) {
          d = std::fabs(x + static_cast<double>(c) / b);
        } else {
          const long disc = b * b - 4 * a * c;
          if (disc < 0 || is_perfect_square(Integer(disc))) continue;
          const double sq = std::sqrt(static_cast<double>(disc));
          const double t = -(b + (b >= 0 ? sq : -sq)) / 2.0;
          const double r1 = t / a;
          const double r2 = t != 0 ? c / t : r1;
          d = std::min(std::fabs(x - r1), std::fabs(x - r2));
        }
        const long h = std::max({a, std::labs(b), std::labs(c)});
        all.push_back({a, b, c, h, d});
        best[static_cast<std::size_t>(h)] = std::min(best[static_cast<std::size_t>(h)], d);
      }
    }
  }
  std::vector<Candidate> out;
  for (const Approx& p : all) {
    const double b = best[static_cast<std::size_t>(p.h)];
    if (p.d > b * (1 + 1e-6) + 1e-12 * (1 + std::fabs(x))) continue;
    IntPolynomial poly(std::vector<Integer>{Integer(p.c), Integer(p.b), Integer(p.a)});
    if (auto c = nearest_root_candidate(poly, oracle)) out.push_back(*c);
  }
  return out;
}

// Shell minima of |P(xi)| and their +-1 perturbations.
std::vector<Candidate> form_candidates(const TargetNumber& xi, int n, long h_max, const ApproximantOptions& opt,
                                       const DistanceOracle& oracle) {
  detail::FormEvaluator ev(xi, opt.scan.max_bits);
  auto shells = detail::shell_minima(ev, n, h_max, opt.scan.jobs, false);
  std::vector<IntPolynomial> polys;
  for (const auto& s : shells) {
    polys.emplace_back(s.coeffs);
    if (!opt.perturb) continue;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
      for (int delta : {-1, 1}) {
        auto c = s.coeffs;
        c[i] += delta;
        polys.emplace_back(c);
      }
    }
  }
  std::vector<Candidate> out;
  for (auto& p : polys) {
    if (p.degree() < 1) continue;
    if (auto c = nearest_root_candidate(p.primitive_part(), oracle)) {
      if (c->height <= h_max) out.push_back(*c);
    }
  }
  return out;
}

}  // namespace

std::vector<AlgebraicApproximant> algebraic_approximant_sequence(const TargetNumber& xi, int n, long h_max,
                                                                 const ApproximantOptions& opt) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (h_max < 1) throw DomainError("h_max must be at least 1");
  if (n == 1) return rational_records(xi, h_max, opt.scan);
  DistanceOracle oracle(xi, opt.scan.max_bits);
  std::vector<Candidate> cands = (n == 2 && h_max <= opt.exhaustive_height)
                                     ? quadratic_candidates(xi, h_max, oracle)
                                     : form_candidates(xi, n, h_max, opt, oracle);
  return records_from(std::move(cands), oracle);
}

}  // namespace wirsing
