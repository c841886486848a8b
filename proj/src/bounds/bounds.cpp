#include "wirsing/bounds.hpp"

#include <algorithm>
#include <optional>

#include "wirsing/errors.hpp"
#include "wirsing/polynomial.hpp"

namespace wirsing {

namespace {

constexpr long kMaxBits = 1 << 14;
// Intervals narrower than 10^-200 that still overlap are settled exactly.
const Rational& width_floor() {
  static const Rational w = pow10(-200);
  return w;
}

RealInterval point(const Rational& q) { return RealInterval(q); }
RealInterval point(long v) { return RealInterval(Rational(v)); }

// Evaluates f(bits) with growing precision until the enclosure is at most `width` wide.
// f may return std::nullopt when `bits` is too coarse to bound a denominator away from 0.
template <class F>
RealInterval refine_until(F f, const Rational& width) {
  long bits = std::max<long>(32, 16 - floor_log2(width));
  for (;;) {
    std::optional<RealInterval> r = f(bits);
    if (r && r->width() <= width) return *r;
    if (bits > kMaxBits) throw PrecisionError("enclosure did not reach the requested width");
    bits *= 2;
  }
}

// Point arguments are refined to `width`; wide arguments get one evaluation whose extra
// spread from rounding is below `width`.
template <class F>
RealInterval evaluate_at(F f, const RealInterval& arg, const Rational& width) {
  if (arg.is_point()) return refine_until(f, width);
  std::optional<RealInterval> r = f(std::max<long>(32, 16 - floor_log2(width)));
  if (!r) throw DomainError("argument interval too wide: a denominator is not bounded away from 0");
  return *r;
}

void require_open_half(const RealInterval& t, const char* what) {
  if (!(t.lo() > 0 && t.hi() < make_rational(1, 2))) {
    throw DomainError(std::string(what) + ": argument must lie in (0, 1/2), got " + to_string(t));
  }
}

void require_admissible(long m, long n) {
  if (n < 4) throw DomainError("n must be at least 4, got n=" + std::to_string(n));
  if (m < 1 || m > max_admissible_m(n)) {
    throw DomainError("m must satisfy 1 <= m < (n-1)/2, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
}

Integer phi_shift(long m, long n) { return Integer(n - 2 * m - 2); }

Integer phi_discriminant(long m, long n) {
  Integer N(n), M(m);
  return N * N + 12 * M * N + 20 * N - 12 * M * M - 24 * M + 4;
}

// 2mn - 2m^2 + 3n - 4m
Integer equilibrium_leading(long m, long n) {
  Integer N(n), M(m);
  return 2 * M * N - 2 * M * M + 3 * N - 4 * M;
}

}  // namespace

Rational default_width() { return pow10(-30); }

long max_admissible_m(long n) {
  // m < (n-1)/2  <=>  2m <= n-2
  return n >= 2 ? (n - 2) / 2 : 0;
}

RealInterval phi_value(long m, long n, const Rational& width) {
  require_admissible(m, n);
  Integer N(n), M(m);
  const Integer num = 4 * M * N + 6 * N - 4 * M * M - 8 * M;
  const Integer disc = phi_discriminant(m, n);
  const Integer shift = 2 * M + 2 - N;
  return refine_until(
      [&](long bits) -> std::optional<RealInterval> {
        RealInterval den = point(Rational(shift)) + sqrt_bits(point(Rational(disc)), bits);
        return point(Rational(num)) / den;
      },
      width);
}

AlgebraicReal phi_algebraic(long m, long n) {
  require_admissible(m, n);
  // Phi = (b + sqrt d) / 4 with b = n - 2m - 2 is the larger root of 16x^2 - 8bx + b^2 - d.
  const Integer b = phi_shift(m, n);
  const Integer d = phi_discriminant(m, n);
  if (is_perfect_square(d)) return AlgebraicReal::rational(make_rational(b + sqrt(d), 4));
  IntPolynomial p(std::vector<Integer>{b * b - d, -8 * b, Integer(16)});
  Rational lo = make_rational(b, 4);
  auto roots = isolate_real_roots(p, RealInterval(lo, lo + root_bound(p) + abs(lo)));
  if (roots.size() != 1) throw Error("internal: Phi root isolation");
  return roots.front();
}

BoundReport phi_bound(long m, long n, int digits) {
  require_admissible(m, n);
  return make_report(FormulaId::PHI, {{"m", Rational(m)}, {"n", Rational(n)}}, digits,
                     [&](const Rational& w) { return phi_value(m, n, w); });
}

AlgebraicReal equilibrium_lambda(long m, long n) {
  require_admissible(m, n);
  const Integer d = phi_discriminant(m, n);
  if (is_perfect_square(d)) {
    return AlgebraicReal::rational(make_rational(sqrt(d) - phi_shift(m, n), 2 * equilibrium_leading(m, n)));
  }
  IntPolynomial p(std::vector<Integer>{Integer(-2), phi_shift(m, n), equilibrium_leading(m, n)});
  // The product of the roots is negative, so exactly one root is positive, and p(1) > 0.
  auto roots = isolate_real_roots(p, RealInterval(Rational(0), Rational(1)));
  if (roots.size() != 1) throw Error("internal: equilibrium root isolation");
  return roots.front();
}

OptimizationResult best_m(long n, const Rational& width) {
  if (n < 4) throw DomainError("n must be at least 4, got n=" + std::to_string(n));
  OptimizationResult res;
  res.n = n;
  const long top = max_admissible_m(n);
  for (long m = 1; m <= top; ++m) res.all_candidates.emplace_back(m, phi_value(m, n, width));

  // The leader has the largest lower endpoint; contenders overlap it.
  auto leader = std::max_element(res.all_candidates.begin(), res.all_candidates.end(),
                                 [](const auto& a, const auto& b) { return a.second.lo() < b.second.lo(); });
  std::vector<long> contenders;
  for (const auto& [m, v] : res.all_candidates) {
    if (v.hi() >= leader->second.lo()) contenders.push_back(m);
  }
  Rational w = width;
  while (contenders.size() > 1 && w > width_floor()) {
    w /= pow2(64);
    std::vector<std::pair<long, RealInterval>> refined;
    for (long m : contenders) refined.emplace_back(m, phi_value(m, n, w));
    Rational best_lo = refined.front().second.lo();
    for (const auto& c : refined) best_lo = std::max(best_lo, c.second.lo());
    contenders.clear();
    for (const auto& [m, v] : refined) {
      if (v.hi() >= best_lo) contenders.push_back(m);
    }
  }
  long best = contenders.front();
  for (std::size_t i = 1; i < contenders.size(); ++i) {
    // Exact comparison of the quadratic surds; equal values keep the smaller m.
    if (compare(phi_algebraic(contenders[i], n), phi_algebraic(best, n)) > 0) best = contenders[i];
  }
  res.best_m = best;
  res.bound = res.all_candidates[static_cast<std::size_t>(best - 1)].second;
  return res;
}

const std::map<long, std::string>& tsi_reference_table() {
  static const std::map<long, std::string> table = {
      {3, "2.73"},    {4, "3.45"},    {5, "4.14"},    {10, "7.06"},   {20, "12.39"},   {24, "14.46"},
      {25, "14.98"},  {30, "17.55"},  {50, "27.70"},  {100, "52.84"}, {1000, "502.98"},
  };
  return table;
}

std::vector<TableRow> bs_table(const std::vector<long>& ns) {
  std::vector<TableRow> rows;
  for (long n : ns) {
    OptimizationResult opt = best_m(n);
    TableRow row;
    row.n = n;
    auto it = tsi_reference_table().find(n);
    if (it != tsi_reference_table().end()) row.tsi_reference = it->second;
    row.bs_value = phi_bound(opt.best_m, n, 2).display;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// F, G, c and the constants

namespace {

std::optional<RealInterval> eval_F_bits(const RealInterval& t, long bits) {
  RealInterval root = sqrt_bits(1 + 12 * t - 12 * t.square(), bits);
  return (4 * t - 4 * t.square()) / (2 * t - 1 + root);
}

std::optional<RealInterval> eval_G_bits(const RealInterval& t, long bits) {
  RealInterval t2 = t.square();
  RealInterval radicand = 4 * t.pow(4) + 24 * t.pow(3) - 32 * t2 + 12 * t + 1;
  RealInterval den = 2 * t2 + 2 * t - 1 + sqrt_bits(radicand, bits);
  if (den.contains_zero()) return std::nullopt;
  return 4 * (t - t2) / den;
}

}  // namespace

RealInterval eval_F(const RealInterval& t, const Rational& width) {
  require_open_half(t, "F");
  return evaluate_at([&](long bits) { return eval_F_bits(t, bits); }, t, width);
}

AlgebraicReal alpha0() {
  // F'(t) = 0 reduces to 6t^2 - 6t + 1 = 0 on (0, 1/2).
  auto roots = isolate_real_roots(IntPolynomial{1, -6, 6}, RealInterval(Rational(0), make_rational(1, 2)));
  if (roots.size() != 1) throw Error("internal: alpha0 isolation");
  return roots.front();
}

std::pair<AlgebraicReal, RealInterval> argmax_F(const Rational& width) {
  AlgebraicReal a = alpha0();
  RealInterval value = refine_until(
      [&](long bits) { return eval_F_bits(a.enclosure(bits), bits); }, width);
  return {a, value};
}

RealInterval inv_sqrt3(const Rational& width) {
  return refine_until([&](long bits) -> std::optional<RealInterval> { return 1 / sqrt_bits(point(3), bits); }, width);
}

RealInterval eval_G(const RealInterval& t, const Rational& width) {
  require_open_half(t, "G");
  return evaluate_at([&](long bits) { return eval_G_bits(t, bits); }, t, width);
}

RealInterval eval_c(const RealInterval& gamma, const Rational& width) {
  require_open_half(gamma, "c");
  return evaluate_at(
      [&](long bits) -> std::optional<RealInterval> {
        const RealInterval& g = gamma;
        RealInterval g2 = g.square();
        RealInterval radicand = 4 * g.pow(4) + 24 * g.pow(3) - 32 * g2 + 12 * g + 1;
        return (2 * g2 + 2 * g - 1 + sqrt_bits(radicand, bits)) / (4 * (g - g2));
      },
      gamma, width);
}

AlgebraicReal gamma0() {
  auto roots = isolate_real_roots(IntPolynomial{1, -6, 10, -12, 4}, RealInterval(Rational(0), make_rational(1, 2)));
  if (roots.size() != 1) throw Error("internal: gamma0 isolation");
  return roots.front();
}

RealInterval delta(const Rational& width) {
  AlgebraicReal g = gamma0();
  return refine_until([&](long bits) { return eval_G_bits(g.enclosure(bits), bits); }, width);
}

// ---------------------------------------------------------------------------
// R and S

namespace {

void require_one_two(const RealInterval& lam, const char* what) {
  if (lam.lo() < 1 || lam.hi() > 2) {
    throw DomainError(std::string(what) + ": argument must lie in [1, 2], got " + to_string(lam));
  }
}

RealInterval eval_R_bits(const RealInterval& t, long bits) {
  return (t - sqrt_bits(2 * t - t.square(), bits)) / (2 * t);
}

}  // namespace

RealInterval eval_R(const RealInterval& lam, const Rational& width) {
  require_one_two(lam, "R");
  return evaluate_at([&](long bits) -> std::optional<RealInterval> { return eval_R_bits(lam, bits); }, lam, width);
}

RealInterval eval_S(const RealInterval& lam, const Rational& width, bool* at_limit) {
  require_one_two(lam, "S");
  if (at_limit) *at_limit = false;
  if (lam.hi() == 2) {
    if (!lam.is_point()) throw DomainError("S: interval arguments must stay below 2");
    if (at_limit) *at_limit = true;
    return point(2);
  }
  return evaluate_at(
      [&](long bits) -> std::optional<RealInterval> {
        RealInterval r = eval_R_bits(lam, bits);
        RealInterval den = 1 - (lam + 1) * r + lam * r.square();
        if (den.contains_zero()) return std::nullopt;
        return (1 - 2 * r) / den;
      },
      lam, width);
}

// ---------------------------------------------------------------------------
// Relations between the exponents

namespace {

// lam_hat >= 1/(n-m) (the closed endpoint is allowed so the threshold value n-m can be
// evaluated) and 1 - m lam_hat > 0.
void require_lam_hat(long n, long m, const RealInterval& lam_hat, const char* what) {
  require_admissible(m, n);
  if (lam_hat.lo() < make_rational(1, n - m)) {
    throw DomainError(std::string(what) + ": requires lambda_hat > 1/(n-m) = 1/" + std::to_string(n - m) +
                      ", got " + to_string(lam_hat));
  }
  if (!(m * lam_hat.hi() < 1)) {
    throw DomainError(std::string(what) + ": requires 1 - m*lambda_hat > 0, got " + to_string(lam_hat));
  }
}

}  // namespace

RealInterval rhs_h11(long n, long m, const RealInterval& lam_hat) {
  require_lam_hat(n, m, lam_hat, "h11");
  return ((n - m) * lam_hat + (n - 2 * m - 1)) / (1 - m * lam_hat);
}

RealInterval rhs_h21(long n, long m, const RealInterval& lam_hat, const RealInterval& lam) {
  require_lam_hat(n, m, lam_hat, "h21");
  if (!((m + 1) * lam_hat.hi() < 1)) {
    throw DomainError("h21: requires 1 - (m+1)*lambda_hat > 0, got " + to_string(lam_hat));
  }
  if (!(m * lam.hi() < 1)) throw DomainError("h21: requires 1 - m*lambda > 0, got " + to_string(lam));
  RealInterval first = ((n - m) * lam_hat + (n - 2 * m - 2)) / (1 - (m + 1) * lam_hat);
  RealInterval second = ((n - m) * lam + (n - 2 * m - 1)) / (1 - m * lam);
  return max(first, second);
}

RealInterval rhs_verynew(long n, long m, const RealInterval& lam_hat) {
  require_lam_hat(n, m, lam_hat, "verynew");
  RealInterval den = (n - m) * lam_hat - 1;
  if (!den.positive()) throw DomainError("verynew: requires lambda_hat > 1/(n-m) strictly, got " + to_string(lam_hat));
  RealInterval factor = point(make_rational(n - m - 1, m + 1));
  return factor * ((n - m) * lam_hat + (n - 2 * m - 1)) / den;
}

RealInterval rhs_windag(long n, long m, const RealInterval& lam_hat) {
  require_lam_hat(n, m, lam_hat, "windag");
  return 1 / lam_hat;
}

AlgebraicReal consistency_max_lambda(long n, long m) {
  require_admissible(m, n);
  // Equate ((k x + n-2m-2) / (1-(m+1)x)) with ((k-1)/(m+1)) ((k x + n-2m-1) / (k x - 1)), k = n - m,
  // and clear denominators.
  const long k = n - m;
  IntPolynomial kx_a{n - 2 * m - 2, k};
  IntPolynomial kx_b{n - 2 * m - 1, k};
  IntPolynomial kx_minus_1{-1, k};
  IntPolynomial one_minus{1, -(m + 1)};
  IntPolynomial p = Integer(m + 1) * (kx_a * kx_minus_1) - Integer(k - 1) * (kx_b * one_minus);
  const Rational lo = make_rational(1, k);
  const Rational hi = make_rational(1, m);
  for (const AlgebraicReal& r : isolate_real_roots(p, RealInterval(lo, hi))) {
    const RealInterval& iso = r.isolating_interval();
    if (iso.is_point() && (iso.lo() == lo || iso.lo() == hi)) continue;
    return r;
  }
  throw DomainError("no consistency bound in (1/(n-m), 1/m) for n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

namespace {

void require_even(long n) {
  if (n < 4 || n % 2 != 0) throw DomainError("requires even n >= 4, got n=" + std::to_string(n));
}

}  // namespace

RealInterval even_n_lower(long n, const RealInterval& lam_hat, const RealInterval& lam) {
  require_even(n);
  if (lam_hat.lo() < make_rational(2, n + 2)) {
    throw DomainError("requires lambda_hat > 2/(n+2), got " + to_string(lam_hat));
  }
  RealInterval d1 = 2 - n * lam_hat;
  RealInterval d2 = 2 - (n - 2) * lam;
  if (!d1.positive() || !d2.positive()) throw DomainError("even-n lower bound: non-positive denominator");
  return max((n + 2) * lam_hat / d1, ((n + 2) * lam + 2) / d2);
}

RealInterval even_n_upper(long n, const RealInterval& lam_hat) {
  require_even(n);
  RealInterval den = (n + 2) * lam_hat - 2;
  if (!den.positive()) throw DomainError("requires lambda_hat > 2/(n+2), got " + to_string(lam_hat));
  return ((n + 2) * lam_hat + 2) / den;
}

RealInterval transfer_rhs(FormulaId kind, const TransferArgs& a) {
  const long n = a.n;
  if (n < 1) throw DomainError("transfer: n must be positive");
  auto need = [&](const std::optional<RealInterval>& v, const char* name) -> const RealInterval& {
    if (!v) throw DomainError(std::string("transfer: missing argument ") + name);
    return *v;
  };
  auto at_least_n = [&](const RealInterval& v, const char* name) {
    if (v.lo() < n) throw DomainError(std::string("transfer: requires ") + name + " >= n, got " + to_string(v));
  };
  switch (kind) {
    case FormulaId::TOLL: {
      const RealInterval& wh = need(a.w_hat, "w_hat");
      at_least_n(wh, "w_hat");
      return RealInterval(make_rational(3, 2)) * wh - n + RealInterval(make_rational(1, 2));
    }
    case FormulaId::DAVSCHM: {
      const RealInterval& lh = need(a.lam_hat, "lambda_hat");
      if (lh.lo() < make_rational(1, n) || lh.hi() > make_rational(2, n)) {
        throw DomainError("transfer: requires lambda_hat in [1/n, 2/n], got " + to_string(lh));
      }
      return 1 / lh;
    }
    case FormulaId::TOLLER_1: {
      const RealInterval& w = need(a.w, "w");
      at_least_n(w, "w");
      return (w + 1) / 2;
    }
    case FormulaId::TOLLER_2: {
      const RealInterval& w = need(a.w, "w");
      at_least_n(w, "w");
      return w - n + 1;
    }
    case FormulaId::TOLLER_3: {
      const RealInterval& wh = need(a.w_hat, "w_hat");
      at_least_n(wh, "w_hat");
      return wh / (wh - n + 1);
    }
    case FormulaId::STRONG_TOLL: {
      const RealInterval& w = need(a.w, "w");
      const RealInterval& wh = need(a.w_hat, "w_hat");
      at_least_n(w, "w");
      at_least_n(wh, "w_hat");
      return w / 2 + wh - n + RealInterval(make_rational(1, 2));
    }
    default:
      throw DomainError("transfer: " + to_string(kind) + " is not a transfer inequality");
  }
}

// ---------------------------------------------------------------------------
// Positivity check behind Phi(m, n) / n > 1/sqrt 3

RealInterval positivity_expression(long n, long m, const Rational& width) {
  return refine_until(
      [&](long bits) -> std::optional<RealInterval> {
        RealInterval s3 = sqrt_bits(point(3), bits);
        RealInterval s6 = sqrt_bits(point(6), bits);
        RealInterval inner = (3 - s3) / s6 * n - s6 * m;
        return -inner.square() + (9 - 2 * s3) * n - point(12 * m);
      },
      width);
}

long floor_n_alpha0(long n) {
  AlgebraicReal a = alpha0();
  for (long bits = 32;; bits *= 2) {
    RealInterval e = a.enclosure(bits);
    Integer lo = floor(e.lo() * n);
    Integer hi = floor(e.hi() * n);
    if (lo == hi) return lo.get_si();
    if (bits > kMaxBits) throw PrecisionError("floor(n alpha0) undecided");
  }
}

PositivityCheck verify_inv_sqrt3_bound(long n) {
  if (n < 4) throw DomainError("n must be at least 4, got n=" + std::to_string(n));
  PositivityCheck out;
  out.n = n;
  long raw = floor_n_alpha0(n);
  out.m = std::clamp(raw, 1L, max_admissible_m(n));
  out.clamped = out.m != raw;
  out.expression = positivity_expression(n, out.m, pow10(-20));
  out.positive = out.expression.positive();
  // Phi(m, n) > n / sqrt 3, refining until the enclosures separate.
  for (Rational w = pow10(-20); w > width_floor(); w /= pow2(64)) {
    RealInterval phi = phi_value(out.m, n, w);
    RealInterval rhs = n * inv_sqrt3(w);
    if (certainly_less(rhs, phi)) {
      out.exceeds_inv_sqrt3 = true;
      break;
    }
    if (certainly_less(phi, rhs)) break;
  }
  return out;
}

}  // namespace wirsing
