#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>

#include "wirsing/errors.hpp"
#include "wirsing/estimate.hpp"

namespace wirsing {

std::string to_string(EstimateKind k) {
  switch (k) {
    case EstimateKind::LAMBDA:
      return "LAMBDA";
    case EstimateKind::LAMBDA_HAT:
      return "LAMBDA_HAT";
    case EstimateKind::W:
      return "W";
    case EstimateKind::W_HAT:
      return "W_HAT";
    case EstimateKind::W_STAR:
      return "W_STAR";
  }
  return "UNKNOWN";
}

std::string to_string(EstimateStatus s) {
  switch (s) {
    case EstimateStatus::FINITE:
      return "FINITE";
    case EstimateStatus::INFINITE:
      return "INFINITE";
    case EstimateStatus::NOT_APPLICABLE:
      return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

namespace {

// q = r^e with e maximal; r is never a perfect power itself.
std::pair<Rational, long> perfect_power(const Rational& q) {
  const Integer num = abs(q.get_num());
  const Integer den = q.get_den();
  const long bits = static_cast<long>(std::max(mpz_sizeinbase(num.get_mpz_t(), 2), mpz_sizeinbase(den.get_mpz_t(), 2)));
  for (long e = bits; e >= 2; --e) {
    Integer rn;
    Integer rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e)) == 0) continue;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e)) == 0) continue;
    return {make_rational(rn, rd), e};
  }
  return {q, 1};
}

std::optional<Rational> exact_log_ratio(const Rational& a, const Rational& b) {
  if (a == 1) return Rational(0);
  auto size = [](const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  };
  if (size(a) > 4096 || size(b) > 4096) return std::nullopt;
  auto [ra, ea] = perfect_power(a);
  auto [rb, eb] = perfect_power(b);
  if (ra == rb) return make_rational(ea, eb);
  if (ra * rb == 1) return make_rational(-ea, eb);
  return std::nullopt;
}

struct Sample {
  RealInterval error;  // L, |P(xi)| or |xi - alpha|
  Integer scale;       // x, height
};

ExponentEstimate base(EstimateKind kind, int n) {
  ExponentEstimate e;
  e.kind = kind;
  e.n = n;
  return e;
}

double mid(const RealInterval& v) { return v.midpoint().get_d(); }

// Ordinary estimate: running max of -log(error)/log(scale) + shift over the trailing window.
ExponentEstimate ordinary(EstimateKind kind, int n, const std::vector<Sample>& s, const Rational& shift,
                          const EstimatorOptions& opt) {
  ExponentEstimate e = base(kind, n);
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].error.hi() == 0) {
      e.status = EstimateStatus::INFINITE;
      e.window = {i, i};
      e.note = "record " + std::to_string(i) + " has zero error";
      return e;
    }
    if (s[i].scale >= 2 && s[i].error.lo() > 0) usable.push_back(i);
  }
  if (usable.size() < 2) throw InputError("too few records with scale >= 2 for an ordinary estimate");
  const std::size_t k = usable.size();
  std::size_t w = std::max(opt.min_window, static_cast<std::size_t>(std::ceil(opt.trailing_fraction * k)));
  w = std::min(w, k);
  std::vector<double> xs;
  std::vector<double> ys;
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t j = k - w; j < k; ++j) {
    const Sample& r = s[usable[j]];
    RealInterval ratio = log_ratio(r.error.reciprocal(), RealInterval(Rational(r.scale)), opt.log_bits) +
                         RealInterval(shift);
    e.value = e.running.empty() ? ratio : max(e.value, ratio);
    e.running.push_back(e.value);
    lo = std::min(lo, mid(ratio));
    hi = std::max(hi, mid(ratio));
    xs.push_back(std::log(r.scale.get_d()));
    ys.push_back(-std::log(mid(r.error)));
  }
  e.window = {usable[k - w], usable[k - 1]};
  e.stability = hi - lo;
  if (xs.size() >= 2) {
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx > 0) e.slope = sxy / sxx + shift.get_d();
  }
  return e;
}

// Uniform estimate: running min of -log(error_i)/log(scale_{i+1}) past the burn-in.
ExponentEstimate uniform(EstimateKind kind, int n, const std::vector<Sample>& s, const EstimatorOptions& opt) {
  ExponentEstimate e = base(kind, n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].error.hi() == 0) {
      e.status = EstimateStatus::INFINITE;
      e.window = {i, i};
      e.note = "record " + std::to_string(i) + " has zero error";
      return e;
    }
  }
  const std::size_t burn = std::min(opt.burn_in, s.size() - 2);
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t i = burn; i + 1 < s.size(); ++i) {
    if (s[i + 1].scale < 2 || s[i].error.lo() <= 0) continue;
    RealInterval ratio = log_ratio(s[i].error.reciprocal(), RealInterval(Rational(s[i + 1].scale)), opt.log_bits);
    if (e.running.empty()) e.window.first = i;
    e.window.second = i;
    e.value = e.running.empty() ? ratio : min(e.value, ratio);
    e.running.push_back(e.value);
    lo = std::min(lo, mid(ratio));
    hi = std::max(hi, mid(ratio));
  }
  if (e.running.empty()) throw InputError("too few records for a uniform estimate");
  e.stability = hi - lo;
  return e;
}

void require_records(std::size_t count) {
  if (count < 3) throw InputError("at least 3 records are needed, got " + std::to_string(count));
}

std::vector<Sample> from_points(const std::vector<MinimalPoint>& seq) {
  std::vector<Sample> s;
  for (const auto& p : seq) s.push_back({p.error, p.x()});
  return s;
}

std::vector<Sample> from_forms(const std::vector<LinearFormRecord>& seq) {
  std::vector<Sample> s;
  for (const auto& r : seq) s.push_back({r.exact_zero ? RealInterval(Rational(0)) : r.value, r.height});
  return s;
}

}  // namespace

RealInterval log_ratio(const RealInterval& a, const RealInterval& b, long bits) {
  if (!a.positive() || !b.positive()) throw DomainError("log_ratio needs positive arguments");
  if (a.is_point() && b.is_point()) {
    if (b.lo() == 1) throw DomainError("log_ratio: log of the denominator is zero");
    if (auto q = exact_log_ratio(a.lo(), b.lo())) return RealInterval(*q);
  }
  RealInterval lb = log(b, bits);
  if (lb.contains_zero()) throw DomainError("log_ratio: log of the denominator is not separated from zero");
  return log(a, bits) / lb;
}

ExponentEstimate estimate_lambda(const std::vector<MinimalPoint>& seq, const EstimatorOptions& opt) {
  require_records(seq.size());
  return ordinary(EstimateKind::LAMBDA, seq.front().n, from_points(seq), Rational(0), opt);
}

ExponentEstimate estimate_lambda_hat(const std::vector<MinimalPoint>& seq, const EstimatorOptions& opt) {
  require_records(seq.size());
  return uniform(EstimateKind::LAMBDA_HAT, seq.front().n, from_points(seq), opt);
}

ExponentEstimate estimate_w(const std::vector<LinearFormRecord>& seq, const EstimatorOptions& opt) {
  if (!seq.empty() && seq.back().exact_zero) {
    ExponentEstimate e = base(EstimateKind::W, static_cast<int>(seq.back().coeffs.size()) - 1);
    e.status = EstimateStatus::INFINITE;
    e.window = {seq.size() - 1, seq.size() - 1};
    e.note = "a polynomial vanishes exactly at the target";
    return e;
  }
  require_records(seq.size());
  return ordinary(EstimateKind::W, static_cast<int>(seq.front().coeffs.size()) - 1, from_forms(seq), Rational(0), opt);
}

ExponentEstimate estimate_w_hat(const std::vector<LinearFormRecord>& seq, const EstimatorOptions& opt) {
  if (!seq.empty() && seq.back().exact_zero) {
    ExponentEstimate e = base(EstimateKind::W_HAT, static_cast<int>(seq.back().coeffs.size()) - 1);
    e.status = EstimateStatus::INFINITE;
    e.window = {seq.size() - 1, seq.size() - 1};
    e.note = "a polynomial vanishes exactly at the target";
    return e;
  }
  require_records(seq.size());
  return uniform(EstimateKind::W_HAT, static_cast<int>(seq.front().coeffs.size()) - 1, from_forms(seq), opt);
}

ExponentEstimate estimate_w_star(const std::vector<AlgebraicApproximant>& seq, int n_label, const EstimatorOptions& opt) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].exact_hit) {
      ExponentEstimate e = base(EstimateKind::W_STAR, n_label > 0 ? n_label : seq[i].degree());
      e.status = EstimateStatus::NOT_APPLICABLE;
      e.window = {i, i};
      e.note = "an approximant equals the target";
      return e;
    }
  }
  require_records(seq.size());
  int n = 1;
  std::vector<Sample> s;
  for (const auto& a : seq) {
    n = std::max(n, a.degree());
    s.push_back({a.distance, a.height});
  }
  return ordinary(EstimateKind::W_STAR, n_label > 0 ? n_label : n, s, Rational(-1), opt);
}

}  // namespace wirsing
