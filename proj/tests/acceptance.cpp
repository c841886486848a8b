// Acceptance run: one PASS/FAIL line per criterion with the tolerances pinned below.
//
// Usage: acceptance [criterion ...]   (default: all of 1..11)

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "wirsing/bounds.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/estimate.hpp"
#include "wirsing/minpoints.hpp"
#include "wirsing/pgn.hpp"

using namespace wirsing;

namespace {

// Pinned limits.
constexpr double kTableSeconds = 5;
constexpr double kConstantsSeconds = 1;
constexpr double kEquilibriumSeconds = 30;
constexpr double kSweepSeconds = 300;
constexpr double kLiouvilleSeconds = 600;
constexpr int kCertifiedDigits = 30;
constexpr long kEquilibriumMaxN = 200;
constexpr long kSweepMaxN = 10000;
constexpr int kSGrid = 1000;
constexpr int kReciprocityPoints = 100;
constexpr int kRandomQuadratics = 20;
constexpr long kQuadraticXMax = 1000000;
constexpr long kNaiveXMax = 10000;
constexpr int kRandomPoints = 10000;
constexpr long kLiouvilleXMax = 1000000000;
constexpr int kLiouvilleDependentMin = 5;
constexpr double kExponentTolerance = 0.05;
constexpr long kExponentScale = 1000000;
constexpr double kLiouvilleLambdaMin = 10;
constexpr std::uint64_t kSeed = 20261015;

const Rational kEquilibriumWidth = pow10(-15);

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
  }
  void note(const std::string& what) { notes.push_back("info: " + what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(prec) << v;
  return s.str();
}

double mid(const RealInterval& v) { return v.midpoint().get_d(); }

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------

Outcome table_reproduction() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<long> ns{4, 5, 10, 20, 24, 25, 30, 50, 100, 1000};
  const std::vector<std::string> want{"2.64", "3.34", "6.42", "12.16", "14.46", "15.04", "17.92", "29.46", "58.32",
                                      "577.92"};
  auto rows = bs_table(ns);
  const double dt = seconds_since(t0);
  bool all = rows.size() == ns.size();
  std::string got;
  for (std::size_t i = 0; i < rows.size() && i < want.size(); ++i) {
    all = all && rows[i].bs_value == want[i];
    got += (i ? " " : "") + rows[i].bs_value;
  }
  o.require(all, "column " + got);
  o.require(dt < kTableSeconds, "runtime " + fmt(dt, 3) + " s < " + fmt(kTableSeconds, 0) + " s");
  return o;
}

Outcome certified_constants() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  struct Item {
    std::string name;
    std::string want;
    std::function<RealInterval(const Rational&)> eval;
  };
  const AlgebraicReal g = gamma0();
  const AlgebraicReal a = alpha0();
  const AlgebraicReal cm = consistency_max_lambda(4, 1);
  std::vector<Item> items{
      {"gamma0", "0.2345", [&](const Rational& w) { return g.refined(w).isolating_interval(); }},
      {"delta", "0.6408", [](const Rational& w) { return delta(w); }},
      {"alpha0", "0.2113", [&](const Rational& w) { return a.refined(w).isolating_interval(); }},
      {"1/sqrt3", "0.5773", [](const Rational& w) { return inv_sqrt3(w); }},
      {"(sqrt19+2)/15", "0.4239", [&](const Rational& w) { return cm.refined(w).isolating_interval(); }},
  };
  for (const auto& it : items) {
    BoundReport four = make_report(FormulaId::PHI, {}, 4, it.eval);
    BoundReport deep = make_report(FormulaId::PHI, {}, kCertifiedDigits, it.eval);
    o.require(four.display == it.want, it.name + " = " + four.display + " (want " + it.want + ")");
    o.require(deep.display.substr(0, 6) == four.display && deep.display.size() == 2 + kCertifiedDigits,
              it.name + " certified to " + std::to_string(kCertifiedDigits) + " digits: " + deep.display);
  }
  const double dt = seconds_since(t0);
  o.require(dt < kConstantsSeconds, "runtime " + fmt(dt, 3) + " s < " + fmt(kConstantsSeconds, 0) + " s");
  return o;
}

Outcome equilibrium_identity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  long pairs = 0;
  long bad = 0;
  Rational widest = 0;
  const Rational w = pow10(-20);
  for (long n = 4; n <= kEquilibriumMaxN; ++n) {
    for (long m = 1; m <= max_admissible_m(n); ++m) {
      RealInterval prod = phi_value(m, n, w) * equilibrium_lambda(m, n).refined(w).isolating_interval();
      ++pairs;
      if (prod.width() > widest) widest = prod.width();
      if (!prod.contains(Rational(1)) || !(prod.width() < kEquilibriumWidth)) ++bad;
    }
  }
  const double dt = seconds_since(t0);
  o.require(bad == 0, std::to_string(pairs) + " admissible pairs, " + std::to_string(bad) +
                          " products missing 1 or too wide (widest " + to_scientific(widest, 3, true) + ")");
  o.require(dt < kEquilibriumSeconds, "runtime " + fmt(dt, 2) + " s < " + fmt(kEquilibriumSeconds, 0) + " s");
  return o;
}

Outcome inv_sqrt3_sweep() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  long ratio_bad = 0;
  long positivity_bad = 0;
  long first_bad = 0;
  for (long n = 4; n <= kSweepMaxN; ++n) {
    PositivityCheck c = verify_inv_sqrt3_bound(n);
    if (!c.exceeds_inv_sqrt3) {
      ++ratio_bad;
      if (!first_bad) first_bad = n;
    }
    if (n >= 5 && !positivity_expression(n, floor_n_alpha0(n)).positive()) {
      ++positivity_bad;
      if (!first_bad) first_bad = n;
    }
  }
  const double dt = seconds_since(t0);
  o.require(ratio_bad == 0, "Phi(m,n)/n > 1/sqrt3 with m = max(1, floor(n alpha0)) for 4 <= n <= " +
                                std::to_string(kSweepMaxN) + " (" + std::to_string(ratio_bad) + " failures)");
  o.require(positivity_bad == 0,
            "positivity expression > 0 with m = floor(n alpha0) for 5 <= n <= " + std::to_string(kSweepMaxN) + " (" +
                std::to_string(positivity_bad) + " failures" + (first_bad ? ", first n=" + std::to_string(first_bad) : "") +
                ")");
  o.require(dt < kSweepSeconds, "runtime " + fmt(dt, 1) + " s < " + fmt(kSweepSeconds, 0) + " s");
  return o;
}

Outcome s_function() {
  Outcome o;
  const Rational w = pow10(-30);
  const std::vector<std::pair<std::string, std::string>> cases{
      {"1.5", "1.0718"}, {"1.75", "1.2038"}, {"1.99", "1.7527"}, {"1.9999", "1.9721"}};
  for (const auto& [arg, want] : cases) {
    RealInterval s = eval_S(RealInterval(parse_rational(arg)), w);
    const std::string trunc = truncated_decimal(s, 4).value_or("?");
    o.require(trunc == want, "S(" + arg + ") truncated to 4 digits = " + trunc + " (want " + want +
                                 "; enclosure " + to_decimal_interval(s, 12) + ")");
    // Diagnostic only: the quoted decimals are consistent with rounding to nearest.
    const Rational rounded = floor(s.midpoint() * 10000 + make_rational(1, 2));
    const bool round_ok = to_decimal_down(rounded / 10000, 4) == want && s.width() < pow10(-12);
    o.note("S(" + arg + ") rounded to 4 digits " + (round_ok ? "matches " : "differs from ") + want);
  }
  RealInterval s1 = eval_S(RealInterval(Rational(1)), w);
  o.require(s1.is_point() && s1.lo() == 1, "S(1) = 1 exactly (got " + to_string(s1) + ")");
  const Rational top = 2 - pow10(-4);
  RealInterval prev;
  long violations = 0;
  for (int i = 0; i < kSGrid; ++i) {
    const Rational g = 1 + (top - 1) * make_rational(i, kSGrid - 1);
    RealInterval cur = eval_S(RealInterval(g), w);
    if (i > 0 && !(cur.lo() > prev.hi())) ++violations;
    prev = cur;
  }
  o.require(violations == 0, "S strictly increasing (certified) on a " + std::to_string(kSGrid) +
                                 "-point grid of [1, 2-10^-4]: " + std::to_string(violations) + " violations");
  return o;
}

Outcome g_c_reciprocity() {
  Outcome o;
  const Rational w = pow10(-30);
  long bad = 0;
  for (int k = 1; k <= kReciprocityPoints; ++k) {
    const RealInterval g(make_rational(k, 2 * kReciprocityPoints + 1));
    RealInterval d = eval_G(g, w) * eval_c(g, w) - 1;
    if (!d.contains(Rational(0))) ++bad;
  }
  o.require(bad == 0, "G(gamma) c(gamma) - 1 contains 0 at gamma = k/" + std::to_string(2 * kReciprocityPoints + 1) +
                          ", k = 1.." + std::to_string(kReciprocityPoints) + " (" + std::to_string(bad) + " failures)");
  return o;
}

// ---------------------------------------------------------------------------

struct Quadratic {
  long a, b, c;
};

std::vector<Quadratic> random_quadratics(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<long> ad(1, 12);
  std::uniform_int_distribution<long> bd(-25, 25);
  std::vector<Quadratic> out;
  while (static_cast<int>(out.size()) < count) {
    Quadratic q{ad(rng), bd(rng), bd(rng)};
    const Integer d = Integer(q.b) * q.b - 4 * Integer(q.a) * q.c;
    if (d <= 0 || is_perfect_square(d)) continue;
    if (std::gcd(std::gcd(q.a, std::abs(q.b)), std::abs(q.c)) != 1) continue;
    out.push_back(q);
  }
  return out;
}

// Independent high-precision value of a target, as a rational within 2^-240.
Rational reference_value(const std::string& spec, const Quadratic* quad) {
  const Rational w = pow2(-260);
  auto root = [&](long a, long b, long c) -> Rational {
    auto [lo, hi] = oracle::bisect_sqrt(Rational(Integer(b) * b - 4 * Integer(a) * c), w);
    return (Rational(-b) + (lo + hi) / 2) / (2 * a);
  };
  if (quad) return root(quad->a, quad->b, quad->c);
  if (spec == "golden") return root(1, -1, -1);
  if (spec == "sqrt:2") return root(1, 0, -2);
  if (spec == "e") {
    Rational sum = 0;
    Rational term = 1;
    for (int k = 0; k <= 80; ++k) {
      if (k) term /= k;
      sum += term;
    }
    return sum;
  }
  if (spec == "pi") {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    auto atan_inv = [](long x) -> Rational {
      Rational sum = 0;
      Rational p = make_rational(1, x);
      for (int k = 0; k < 120; ++k) {
        const Rational t = p / (2 * k + 1);
        if (k % 2) {
          sum -= t;
        } else {
          sum += t;
        }
        p /= x * x;
      }
      return sum;
    };
    return 16 * atan_inv(5) - 4 * atan_inv(239);
  }
  if (spec == "liouville") return liouville_partial_sum(10, 5);
  throw std::runtime_error("no reference for " + spec);
}

// Naive double loop: every x, every coordinate, keep strict improvements of L. xi is only known
// to about 2^-240, so differences below 2^-200 count as ties (sqrt 2 at n = 3 has L(4) = L(2)).
std::string naive_minimal_points(const Rational& xi, int n, long x_max) {
  const Rational slack = pow2(-200);
  std::vector<Rational> pw{xi};
  for (int j = 1; j < n; ++j) pw.push_back(pw.back() * xi);
  std::string out;
  Rational best = -1;
  for (long x = 1; x <= x_max; ++x) {
    Rational L = 0;
    std::vector<Integer> ys;
    for (int j = 0; j < n; ++j) {
      const Rational v = x * pw[static_cast<std::size_t>(j)];
      ys.push_back(oracle::nearest(v));
      const Rational d = oracle::dist_to_int(v);
      if (d > L) L = d;
    }
    if (best < 0 || L < best - slack) {
      best = L;
      out += std::to_string(x);
      for (const auto& y : ys) out += " " + y.get_str();
      out += "\n";
    }
  }
  return out;
}

std::string integer_part_lines(const std::vector<MinimalPoint>& pts) {
  std::string out;
  for (const auto& p : pts) {
    std::string line = to_line(p);
    out += line.substr(0, line.find(" [")) + "\n";
  }
  return out;
}

Outcome minimal_point_oracles() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  auto quads = random_quadratics(rng, kRandomQuadratics);
  ScanOptions opt;
  opt.jobs = jobs();
  int cf_ok = 0;
  for (const auto& q : quads) {
    auto pts = best_approx_sequence(*make_quadratic(q.a, q.b, q.c), 1, kQuadraticXMax, opt);
    auto cf = oracle::quadratic_convergent_denominators(-q.b, Integer(q.b) * q.b - 4 * Integer(q.a) * q.c, 2 * q.a,
                                                        kQuadraticXMax);
    std::vector<Integer> xs;
    for (const auto& p : pts) xs.push_back(p.x());
    if (xs == cf) {
      ++cf_ok;
    } else {
      o.note("quad:" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) +
             " records differ from the convergent denominators");
    }
  }
  o.require(cf_ok == kRandomQuadratics, std::to_string(cf_ok) + "/" + std::to_string(kRandomQuadratics) +
                                            " random quadratics: n=1 records = convergent denominators up to 10^6");

  int naive_ok = 0;
  int naive_total = 0;
  std::vector<std::pair<std::string, const Quadratic*>> targets{
      {"golden", nullptr}, {"sqrt:2", nullptr}, {"e", nullptr}, {"pi", nullptr}, {"liouville", nullptr}};
  for (int i = 0; i < 3; ++i) targets.emplace_back("quad", &quads[static_cast<std::size_t>(i)]);
  for (const auto& [spec, quad] : targets) {
    TargetPtr t = quad ? make_quadratic(quad->a, quad->b, quad->c) : parse_target(spec);
    const Rational ref = reference_value(spec, quad);
    for (int n = 1; n <= 3; ++n) {
      ++naive_total;
      const std::string lib = integer_part_lines(best_approx_sequence(*t, n, kNaiveXMax, opt));
      const std::string naive = naive_minimal_points(ref, n, kNaiveXMax);
      if (lib == naive) {
        ++naive_ok;
      } else {
        o.note(t->describe() + " n=" + std::to_string(n) + " differs from the naive oracle");
      }
    }
  }
  o.require(naive_ok == naive_total, std::to_string(naive_ok) + "/" + std::to_string(naive_total) +
                                         " (target, n <= 3) scans at x_max = 10^4 identical to the naive double loop");
  return o;
}

Outcome hankel_duality() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> nd(1, 6);
  std::uniform_int_distribution<long> small(-9, 9);
  std::uniform_int_distribution<int> mode(0, 2);
  long checks = 0;
  long bad = 0;
  long dependent = 0;
  for (int i = 0; i < kRandomPoints; ++i) {
    const int n = nd(rng);
    std::vector<long> c(static_cast<std::size_t>(n + 1));
    const int md = mode(rng);
    if (md == 0) {
      for (auto& v : c) v = small(rng);
    } else {
      // Linear recurrence of random order: low Hankel defect by construction.
      const int order = 1 + static_cast<int>(rng() % 3);
      std::vector<long> rec(static_cast<std::size_t>(order));
      for (auto& r : rec) r = small(rng) % 3;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < static_cast<std::size_t>(order)) {
          c[k] = small(rng);
        } else {
          long v = 0;
          for (int r = 0; r < order; ++r) v += rec[static_cast<std::size_t>(r)] * c[k - 1 - static_cast<std::size_t>(r)];
          c[k] = v;
        }
      }
    }
    if (c[0] == 0) c[0] = 1;
    MinimalPoint p = make_point(c);
    const int defect = hankel_defect(p);
    for (int m = 1; m <= (n + 1) / 2; ++m) {
      ++checks;
      const bool indep = shifted_vectors_independent(p, m);
      if (!indep) ++dependent;
      if (indep != (defect > m)) ++bad;
    }
  }
  o.require(bad == 0, std::to_string(checks) + " (point, m) pairs over " + std::to_string(kRandomPoints) +
                          " random points, " + std::to_string(dependent) + " dependent; " + std::to_string(bad) +
                          " disagreements");
  return o;
}

Outcome liouville_dependence() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  ScanOptions opt;
  opt.jobs = jobs();
  auto pts = best_approx_sequence(*make_liouville(10), 3, kLiouvilleXMax, opt);
  int in_range = 0;
  std::vector<std::string> dep;
  for (const auto& p : pts) {
    if (p.x() <= 10 || p.x() >= kLiouvilleXMax) continue;
    ++in_range;
    if (!shifted_vectors_independent(p, 1)) dep.push_back(p.x().get_str());
  }
  const double dt = seconds_since(t0);
  std::string list;
  for (const auto& x : dep) list += (list.empty() ? "" : ",") + x;
  o.require(static_cast<int>(dep.size()) >= kLiouvilleDependentMin,
            std::to_string(dep.size()) + " of " + std::to_string(in_range) +
                " minimal points with 10 < x < 10^9 have dependent shifted vectors (need >= " +
                std::to_string(kLiouvilleDependentMin) + ")" + (list.empty() ? "" : ": x = " + list));
  o.require(dt < kLiouvilleSeconds, "runtime " + fmt(dt, 1) + " s < " + fmt(kLiouvilleSeconds, 0) + " s");
  return o;
}

Outcome exponent_sanity() {
  Outcome o;
  ScanOptions opt;
  opt.jobs = jobs();
  ApproximantOptions aopt;
  aopt.scan = opt;
  auto g = make_golden();
  auto pts = best_approx_sequence(*g, 1, kExponentScale, opt);
  auto forms = best_linear_form_sequence(*g, 1, kExponentScale, opt);
  auto approx = algebraic_approximant_sequence(*g, 1, kExponentScale, aopt);
  const std::vector<std::pair<std::string, ExponentEstimate>> es{
      {"lambda", estimate_lambda(pts)},   {"lambda_hat", estimate_lambda_hat(pts)}, {"w", estimate_w(forms)},
      {"w_hat", estimate_w_hat(forms)},   {"w_star", estimate_w_star(approx)}};
  for (const auto& [name, e] : es) {
    const bool finite = e.status == EstimateStatus::FINITE;
    const double v = finite ? mid(e.value) : 0;
    o.require(finite && std::fabs(v - 1) <= kExponentTolerance,
              "golden " + name + " = " + (finite ? fmt(v) : to_string(e.status)) + " within " +
                  fmt(kExponentTolerance, 2) + " of 1" + (e.slope ? " (slope diagnostic " + fmt(*e.slope) + ")" : ""));
  }

  // The scan caps x at 10^12; the Liouville record x = 10^24 is out of reach.
  auto lpts = best_approx_sequence(*make_liouville(10), 1, kLiouvilleXMax, opt);
  auto ll = estimate_lambda(lpts);
  o.require(mid(ll.value) > kLiouvilleLambdaMin,
            "Liouville lambda = " + fmt(mid(ll.value)) + " > " + fmt(kLiouvilleLambdaMin, 0) + " at x_max = 10^9");

  // Golden ratio, n = 4, m = 1: every relation must be gated.
  const long n = 4;
  const long m = 1;
  auto p4 = best_approx_sequence(*g, static_cast<int>(n), kExponentScale, opt);
  std::vector<ExponentEstimate> set{estimate_lambda(p4), estimate_lambda_hat(p4)};
  for (long k : {n, n - m, m + 1}) {
    auto f = best_linear_form_sequence(*g, static_cast<int>(k), 30, opt);
    set.push_back(estimate_w(f));
    set.push_back(estimate_w_hat(f));
  }
  set.push_back(estimate_w_star(algebraic_approximant_sequence(*g, static_cast<int>(n), 30, aopt), static_cast<int>(n)));
  auto reports = verify_relations(set, n, m, g->algebraic_degree() > 0);
  bool gated = true;
  for (const auto& r : reports) {
    if (r.relation_id == FormulaId::H11 || r.relation_id == FormulaId::H21 || r.relation_id == FormulaId::VERYNEW ||
        r.relation_id == FormulaId::WINDAG) {
      gated = gated && r.verdict == RelationVerdict::NOT_APPLICABLE;
    }
  }
  o.require(gated, "verify gates the n=4, m=1 relations as NOT_APPLICABLE for the golden ratio");
  const RealInterval lh4 = set[1].value;
  o.require(lh4.hi() < make_rational(1, 3),
            "golden lambda_hat_4 estimate " + fmt(mid(lh4)) + " < 1/3 at x_max = 10^6");
  return o;
}

Outcome transfer_round_trips() {
  Outcome o;
  long trips = 0;
  long bad = 0;
  for (int N = 1; N <= 6; ++N) {
    for (ExponentKind k : {ExponentKind::LAMBDA, ExponentKind::LAMBDA_HAT, ExponentKind::W, ExponentKind::W_HAT}) {
      const bool dual = k == ExponentKind::W || k == ExponentKind::W_HAT;
      const Rational dirichlet = dual ? Rational(N) : make_rational(1, N);
      for (int i = 0; i <= 40; ++i) {
        const RealInterval e(dirichlet + make_rational(i, 7));
        RealInterval psi = psi_from_lambda(e, N, k);
        RealInterval back = lambda_from_psi(psi, N, k);
        ++trips;
        if (!(back == e) || !psi.is_point()) ++bad;
        // And from the psi side: psi -> exponent -> psi.
        RealInterval again = psi_from_lambda(lambda_from_psi(psi, N, k), N, k);
        ++trips;
        if (!(again == psi)) ++bad;
      }
    }
  }
  o.require(bad == 0, std::to_string(trips) + " exact round trips over N = 1..6 and all four exponents (" +
                          std::to_string(bad) + " with nonzero slack)");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction},
      {"certified constants", certified_constants},
      {"equilibrium identity", equilibrium_identity},
      {"1/sqrt3 sweep", inv_sqrt3_sweep},
      {"S-function values", s_function},
      {"G-c reciprocity", g_c_reciprocity},
      {"minimal-point oracle equivalence", minimal_point_oracles},
      {"Hankel/independence duality", hankel_duality},
      {"Liouville dependence", liouville_dependence},
      {"finite-scale exponent sanity", exponent_sanity},
      {"transfer-identity round trips", transfer_round_trips},
  };
  std::set<int> chosen;
  for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!chosen.empty() && !chosen.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << "CRITERION " << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << fmt(seconds_since(t0), 2) << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout << std::flush;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria passed\n");
  return failures ? 1 : 0;
}
