#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "../minpoints/fixed_point.hpp"
#include "../minpoints/forms.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/minpoints.hpp"
#include "wirsing/pgn.hpp"

namespace wirsing {

std::string to_string(PsiSide s) { return s == PsiSide::PRIMAL ? "PRIMAL" : "DUAL"; }

std::string to_string(ExponentKind k) {
  switch (k) {
    case ExponentKind::LAMBDA:
      return "LAMBDA";
    case ExponentKind::LAMBDA_HAT:
      return "LAMBDA_HAT";
    case ExponentKind::W:
      return "W";
    case ExponentKind::W_HAT:
      return "W_HAT";
  }
  return "UNKNOWN";
}

namespace {

using detail::u128;

constexpr long kLogBits = 64;
constexpr long kVariationBudget = 20000;

long double signed_fraction(u128 v) {
  const long double scale = std::ldexp(1.0L, -128);
  if (v >> 127) return -static_cast<long double>(static_cast<u128>(-v)) * scale;
  return static_cast<long double>(v) * scale;
}

struct Item {
  long double key;  // approximate log_Q of the required box scaling
  std::vector<long> a;  // primal: x; dual: a_1 .. a_N
  std::vector<int> delta;  // primal: y offsets; dual: a_0 offset
};

bool item_less(const Item& p, const Item& q) {
  if (p.key != q.key) return p.key < q.key;
  if (p.a != q.a) return p.a < q.a;
  return p.delta < q.delta;
}

void check_args(int N, const Rational& Q, long search_bound) {
  if (N < 1 || N > 6) throw DomainError("N must lie in [1, 6]");
  if (Q <= 1) throw DomainError("Q must exceed 1");
  if (search_bound < 1) throw SearchExhausted("search bound below 1 admits no vectors");
}

struct Greedy {
  std::vector<std::vector<Integer>> rows;
  std::vector<RealInterval> mus;
};

// Accepts vectors in key order whenever they raise the exact rank, up to `want` of them.
template <typename Build, typename Mu>
Greedy run_greedy(std::vector<Item>& items, int want, Build&& build, Mu&& mu) {
  std::sort(items.begin(), items.end(), item_less);
  Greedy g;
  for (const Item& it : items) {
    std::vector<Integer> v = build(it);
    auto trial = g.rows;
    trial.push_back(v);
    if (matrix_rank(trial) <= static_cast<int>(g.rows.size())) continue;
    g.rows.push_back(std::move(v));
    g.mus.push_back(mu(g.rows.back()));
    if (static_cast<int>(g.rows.size()) == want) break;
  }
  return g;
}

std::vector<PsiSample> to_samples(const Greedy& g, int N, const Rational& Q, PsiSide side, int first_l, int last_l,
                                  const std::function<bool(const RealInterval&)>& truncated) {
  std::vector<PsiSample> out;
  RealInterval running;
  for (int l = 1; l <= last_l; ++l) {
    if (l > static_cast<int>(g.rows.size())) {
      throw SearchExhausted("only " + std::to_string(g.rows.size()) + " independent vectors within the search bound, " +
                            std::to_string(l) + " needed; raise the bound");
    }
    running = l == 1 ? g.mus[0] : max(running, g.mus[static_cast<std::size_t>(l - 1)]);
    if (l < first_l) continue;
    PsiSample s;
    s.Q = Q;
    s.N = N;
    s.l = l;
    s.side = side;
    s.value = running;
    s.truncated = truncated(running);
    s.witnesses.assign(g.rows.begin(), g.rows.begin() + l);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PsiSample> primal(const TargetNumber& xi, int N, const Rational& Q, long B, int first_l, int last_l) {
  check_args(N, Q, B);
  std::vector<u128> F;
  for (int j = 1; j <= N; ++j) F.push_back(detail::scaled_fraction(xi, static_cast<unsigned>(j)));
  const long double logQ = std::log(Q.get_d());
  long variations = 1;
  for (int j = 0; j < N; ++j) variations *= 3;
  const long vary_up_to = std::max(1L, std::min(B, kVariationBudget / variations));

  std::vector<Item> items;
  std::vector<u128> f(F.size(), 0);
  for (long x = 1; x <= B; ++x) {
    std::vector<long double> e(F.size());
    for (std::size_t j = 0; j < F.size(); ++j) {
      f[j] += F[j];
      e[j] = signed_fraction(f[j]);  // x xi^j - nearest
    }
    const long double lx = std::log(static_cast<long double>(x)) / logQ - 1;
    const long pats = x <= vary_up_to ? variations : 1;
    for (long code = 0; code < pats; ++code) {
      std::vector<int> d(F.size(), 0);
      long c = code;
      long double L = 0;
      for (std::size_t j = 0; j < F.size(); ++j) {
        d[j] = static_cast<int>(c % 3) - 1;
        c /= 3;
        if (pats == 1) d[j] = 0;
        L = std::max(L, std::fabs(e[j] - d[j]));
      }
      const long double ll = L > 0 ? std::log(L) / logQ + 1.0L / N : -INFINITY;
      items.push_back({std::max(lx, ll), {x}, d});
    }
  }

  detail::FormEvaluator ev(xi, ScanOptions{}.max_bits);
  const RealInterval lq = log(RealInterval(Q), kLogBits);
  auto build = [&](const Item& it) {
    std::vector<Integer> v{Integer(it.a[0])};
    for (int j = 1; j <= N; ++j) v.push_back(ev.nearest_multiple(v[0], static_cast<unsigned>(j)) + it.delta[static_cast<std::size_t>(j - 1)]);
    return v;
  };
  auto mu = [&](const std::vector<Integer>& v) {
    RealInterval L;
    for (int j = 1; j <= N; ++j) {
      detail::Form t(static_cast<std::size_t>(j) + 1, Integer(0));
      t[0] = -v[static_cast<std::size_t>(j)];
      t[static_cast<std::size_t>(j)] = v[0];
      L = max(L, ev.abs_value(t));
    }
    RealInterval m = log(RealInterval(Rational(v[0])), kLogBits) / lq - 1;
    if (L.lo() > 0) m = max(m, log(L, kLogBits) / lq + RealInterval(make_rational(1, N)));
    return m;
  };
  Greedy g = run_greedy(items, last_l, build, mu);
  // Far vectors (some y off the nearest integer) beyond vary_up_to need mu >= far_floor.
  const long double far_floor =
      std::max(std::log(static_cast<long double>(vary_up_to + 1)) / logQ - 1, 1.0L / N - std::log(2.0L) / logQ);
  auto truncated = [&](const RealInterval& v) {
    const long double hi = v.hi().get_d();
    return (1 + hi) * logQ > std::log(static_cast<long double>(B)) || (vary_up_to < B && hi > far_floor);
  };
  return to_samples(g, N, Q, PsiSide::PRIMAL, first_l, last_l, truncated);
}

std::vector<PsiSample> dual(const TargetNumber& xi, int N, const Rational& Q, long B, int first_l, int last_l) {
  check_args(N, Q, B);
  if (std::pow(2.0 * static_cast<double>(B) + 1.0, N) > 5e7) throw DomainError("dual search box too large; lower the bound");
  std::vector<u128> F;
  std::vector<long double> P;
  const long double x = static_cast<long double>(xi.enclose(96).midpoint().get_d());
  for (int j = 1; j <= N; ++j) {
    F.push_back(detail::scaled_fraction(xi, static_cast<unsigned>(j)));
    P.push_back(std::pow(x, static_cast<long double>(j)));
  }
  const long double logQ = std::log(Q.get_d());

  std::vector<Item> items;
  std::vector<long> a(static_cast<std::size_t>(N), -B);
  for (;;) {
    int top = 0;
    for (int j = N - 1; j >= 0; --j) {
      if (a[static_cast<std::size_t>(j)] != 0) {
        top = a[static_cast<std::size_t>(j)] > 0 ? 1 : -1;
        break;
      }
    }
    if (top > 0) {
      u128 s = 0;
      long double sum = 0;
      long h = 0;
      for (int j = 0; j < N; ++j) {
        const long v = a[static_cast<std::size_t>(j)];
        s += static_cast<u128>(static_cast<__int128>(v)) * F[static_cast<std::size_t>(j)];
        sum += v * P[static_cast<std::size_t>(j)];
        h = std::max(h, std::labs(v));
      }
      const long double frac = signed_fraction(s);
      const long a0 = -std::llround(sum - frac);
      for (int d : {-1, 0, 1}) {
        const long double V = std::fabs(frac + d);
        const long double H = static_cast<long double>(std::max(h, std::labs(a0 + d)));
        const long double kh = std::log(H) / logQ - 1.0L / N;
        const long double kv = V > 0 ? std::log(V) / logQ + 1 : -INFINITY;
        items.push_back({std::max(kh, kv), a, {d}});
      }
    }
    std::size_t k = 0;
    while (k < a.size() && a[k] == B) a[k++] = -B;
    if (k == a.size()) break;
    ++a[k];
  }

  detail::FormEvaluator ev(xi, ScanOptions{}.max_bits);
  const RealInterval lq = log(RealInterval(Q), kLogBits);
  auto build = [&](const Item& it) {
    detail::Form c(static_cast<std::size_t>(N) + 1);
    for (int j = 1; j <= N; ++j) c[static_cast<std::size_t>(j)] = it.a[static_cast<std::size_t>(j - 1)];
    c[0] = ev.nearest_constant(c) + it.delta[0];
    return std::vector<Integer>(c.begin(), c.end());
  };
  auto mu = [&](const std::vector<Integer>& c) {
    Integer h = 0;
    for (const auto& z : c) h = std::max(h, Integer(abs(z)));
    RealInterval m = log(RealInterval(Rational(h)), kLogBits) / lq - RealInterval(make_rational(1, N));
    RealInterval V = ev.is_exact_zero(c).value_or(false) ? RealInterval(Rational(0)) : ev.abs_value(c);
    if (V.lo() > 0) {
      m = max(m, log(V, kLogBits) / lq + 1);
    } else if (V.hi() > 0) {
      RealInterval upper = log(RealInterval(V.hi()), kLogBits) / lq + 1;
      m = RealInterval(m.lo(), std::max(m.hi(), upper.hi()));
    }
    return m;
  };
  Greedy g = run_greedy(items, last_l, build, mu);
  auto truncated = [&](const RealInterval& v) {
    return (1.0L / N + v.hi().get_d()) * logQ > std::log(static_cast<long double>(B));
  };
  return to_samples(g, N, Q, PsiSide::DUAL, first_l, last_l, truncated);
}

void check_l(int N, int l) {
  if (l < 1 || l > N + 1) throw DomainError("l must lie in [1, N+1]");
}

}  // namespace

PsiSample psi_empirical(const TargetNumber& xi, int N, int l, const Rational& Q, long search_bound) {
  check_l(N, l);
  return primal(xi, N, Q, search_bound, l, l).front();
}

PsiSample psi_star_empirical(const TargetNumber& xi, int N, int l, const Rational& Q, long search_bound) {
  check_l(N, l);
  return dual(xi, N, Q, search_bound, l, l).front();
}

std::vector<PsiSample> psi_all(const TargetNumber& xi, int N, const Rational& Q, long search_bound, PsiSide side) {
  return side == PsiSide::PRIMAL ? primal(xi, N, Q, search_bound, 1, N + 1) : dual(xi, N, Q, search_bound, 1, N + 1);
}

RealInterval lambda_from_psi(const RealInterval& psi, int N, ExponentKind kind) {
  if (N < 1) throw DomainError("N must be at least 1");
  const RealInterval ratio(make_rational(N + 1, N));
  const bool primal = kind == ExponentKind::LAMBDA || kind == ExponentKind::LAMBDA_HAT;
  const RealInterval factor = primal ? psi + 1 : psi + RealInterval(make_rational(1, N));
  if (!factor.positive()) throw DomainError("transfer identity needs a positive psi factor");
  return ratio / factor - 1;
}

RealInterval psi_from_lambda(const RealInterval& exponent, int N, ExponentKind kind, int l) {
  if (N < 1) throw DomainError("N must be at least 1");
  if (l < 1 || l > N + 1) throw DomainError("l must lie in [1, N+1]");
  const bool primal = kind == ExponentKind::LAMBDA || kind == ExponentKind::LAMBDA_HAT;
  if (l == 1) {
    const Rational floor_value = primal ? make_rational(1, N) : Rational(N);
    if (exponent.lo() < floor_value) {
      throw DomainError("exponent below its Dirichlet value " + to_string(floor_value));
    }
  }
  const RealInterval factor = exponent + 1;
  if (!factor.positive()) throw DomainError("transfer identity needs 1 + exponent > 0");
  const RealInterval ratio(make_rational(N + 1, N));
  return primal ? ratio / factor - 1 : ratio / factor - RealInterval(make_rational(1, N));
}

std::string samples_to_tsv(const std::vector<PsiSample>& samples, bool header, int digits) {
  std::ostringstream os;
  if (header) os << "Q\tN\tl\tside\tlo\thi\ttruncated\n";
  for (const auto& s : samples) {
    os << to_string(s.Q) << '\t' << s.N << '\t' << s.l << '\t' << to_string(s.side) << '\t'
       << to_decimal_down(s.value.lo(), digits) << '\t' << to_decimal_up(s.value.hi(), digits) << '\t'
       << (s.truncated ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace wirsing
