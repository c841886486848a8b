#include <algorithm>
#include <cmath>
#include <thread>

#include "fixed_point.hpp"
#include "forms.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/minpoints.hpp"

namespace wirsing {

namespace detail {

namespace {

struct Candidate {
  long height;
  std::vector<long> coeffs;  // a_1 .. a_n
};

// Walks the normalized box (highest nonzero coefficient positive) in slices of the
// outermost coordinate; visit(height, a, d, err) sees every form of the slice.
template <typename Visit>
void walk_slice(const std::vector<u128>& F, long h, long outer, Visit&& visit) {
  const std::size_t n = F.size();
  std::vector<long> a(n, 0);
  if (n == 1) {
    if (outer != 0) return;
    u128 s = 0;
    for (long a1 = 1; a1 <= h; ++a1) {
      s += F[0];
      a[0] = a1;
      visit(a1, a, detail::circular(s), static_cast<u128>(2 * a1 + 1));
    }
    return;
  }
  // a[n-1] = outer; middle coordinates a[1..n-2] run as an odometer.
  a[n - 1] = outer;
  for (std::size_t k = 1; k + 1 < n; ++k) a[k] = -h;
  for (;;) {
    // Sign of the highest nonzero among a[1..n-1] decides the admissible range of a[0].
    int top = 0;
    for (std::size_t k = n - 1; k >= 1; --k) {
      if (a[k] != 0) {
        top = a[k] > 0 ? 1 : -1;
        break;
      }
    }
    if (top >= 0) {
      u128 base = 0;
      long outer_height = 0;
      long outer_l1 = 0;
      for (std::size_t k = 1; k < n; ++k) {
        base += static_cast<u128>(static_cast<__int128>(a[k])) * F[k];
        outer_height = std::max(outer_height, std::labs(a[k]));
        outer_l1 += std::labs(a[k]);
      }
      const long first = (top == 0) ? 1 : -h;
      u128 s = base + static_cast<u128>(static_cast<__int128>(first)) * F[0];
      for (long a0 = first; a0 <= h; ++a0, s += F[0]) {
        a[0] = a0;
        const long height = std::max(outer_height, std::labs(a0));
        visit(height, a, detail::circular(s), static_cast<u128>(2 * (outer_l1 + std::labs(a0)) + 1));
      }
    }
    std::size_t k = 1;
    while (k + 1 < n && a[k] == h) {
      a[k] = -h;
      ++k;
    }
    if (k + 1 >= n) break;
    ++a[k];
  }
}

template <typename Work>
void run_slices(long h, unsigned jobs, Work&& work) {
  const long slices = h + 1;  // outermost coordinate ranges over 0 .. h after normalization
  jobs = static_cast<unsigned>(std::min<long>(std::max(1u, jobs), slices));
  if (jobs == 1) {
    for (long o = 0; o <= h; ++o) work(0u, o);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (long o = t; o <= h; o += jobs) work(t, o);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<ShellMinimum> shell_minima(FormEvaluator& ev, int n, long h_max, unsigned jobs, bool stop_at_zero) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (h_max < 1) throw DomainError("h_max must be at least 1");
  if (std::pow(2.0 * static_cast<double>(h_max) + 1.0, n) > 2e10) {
    throw DomainError("coefficient box too large; lower h_max");
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<u128> F;
  for (int j = 1; j <= n; ++j) F.push_back(scaled_fraction(ev.target(), static_cast<unsigned>(j)));

  const u128 top = ~static_cast<u128>(0);
  const auto shells = static_cast<std::size_t>(h_max) + 1;
  std::vector<std::vector<u128>> local(jobs, std::vector<u128>(shells, top));
  run_slices(h_max, jobs, [&](unsigned t, long outer) {
    auto& u = local[t];
    walk_slice(F, h_max, outer, [&](long height, const std::vector<long>&, u128 d, u128 err) {
      u[static_cast<std::size_t>(height)] = std::min(u[static_cast<std::size_t>(height)], saturating_add(d, err));
    });
  });
  std::vector<u128> upper(shells, top);
  for (const auto& u : local) {
    for (std::size_t h = 0; h < shells; ++h) upper[h] = std::min(upper[h], u[h]);
  }

  std::vector<std::vector<Candidate>> found(jobs);
  run_slices(h_max, jobs, [&](unsigned t, long outer) {
    walk_slice(F, h_max, outer, [&](long height, const std::vector<long>& a, u128 d, u128 err) {
      if (d <= saturating_add(upper[static_cast<std::size_t>(height)], err)) found[t].push_back({height, a});
    });
  });
  std::vector<Candidate> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
    if (x.height != y.height) return x.height < y.height;
    return std::lexicographical_compare(x.coeffs.rbegin(), x.coeffs.rend(), y.coeffs.rbegin(), y.coeffs.rend());
  });

  std::vector<ShellMinimum> out;
  std::size_t i = 0;
  while (i < all.size()) {
    const long h = all[i].height;
    ShellMinimum best;
    best.height = h;
    for (; i < all.size() && all[i].height == h; ++i) {
      Form c(static_cast<std::size_t>(n) + 1);
      for (int j = 1; j <= n; ++j) c[static_cast<std::size_t>(j)] = all[i].coeffs[static_cast<std::size_t>(j - 1)];
      c[0] = ev.nearest_constant(c);
      if (best.coeffs.empty()) {
        best.coeffs = std::move(c);
        continue;
      }
      const int cmp = ev.compare_abs(c, best.coeffs);
      if (cmp < 0) {
        best.coeffs = std::move(c);
        best.tie = false;
      } else if (cmp == 0) {
        best.tie = true;
      }
    }
    best.exact_zero = ev.is_exact_zero(best.coeffs).value_or(false);
    out.push_back(std::move(best));
    if (stop_at_zero && out.back().exact_zero) break;
  }
  return out;
}

}  // namespace detail

std::vector<LinearFormRecord> best_linear_form_sequence(const TargetNumber& xi, int n, long h_max,
                                                        const ScanOptions& opt) {
  detail::FormEvaluator ev(xi, opt.max_bits);
  std::vector<LinearFormRecord> out;
  const detail::Form* prev = nullptr;
  auto shells = detail::shell_minima(ev, n, h_max, opt.jobs, true);
  for (const auto& s : shells) {
    if (prev) {
      const int cmp = ev.compare_abs(s.coeffs, *prev);
      if (cmp > 0) continue;
      if (cmp == 0) {
        out.back().tie = true;
        continue;
      }
    }
    LinearFormRecord r;
    r.coeffs = s.coeffs;
    r.height = s.height;
    r.exact_zero = s.exact_zero;
    r.tie = s.tie;
    r.value = s.exact_zero ? RealInterval(Rational(0)) : ev.abs_value(s.coeffs);
    out.push_back(std::move(r));
    prev = &s.coeffs;
    if (s.exact_zero) break;
  }
  return out;
}

}  // namespace wirsing
