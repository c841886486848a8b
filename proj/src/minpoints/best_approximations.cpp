#include <algorithm>
#include <sstream>
#include <thread>

#include "fixed_point.hpp"
#include "forms.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/minpoints.hpp"

namespace wirsing {

namespace {

using detail::u128;

struct Candidate {
  std::uint64_t x;
  u128 d;
};

struct ChunkResult {
  std::vector<Candidate> candidates;
  u128 upper = ~static_cast<u128>(0);
};

// Keeps every x whose approximate error could still beat all earlier ones in the chunk.
ChunkResult scan_chunk(const std::vector<u128>& F, std::uint64_t first, std::uint64_t last) {
  ChunkResult out;
  std::vector<u128> f(F.size());
  for (std::size_t j = 0; j < F.size(); ++j) f[j] = static_cast<u128>(first) * F[j];
  for (std::uint64_t x = first;; ++x) {
    u128 d = 0;
    for (const u128 v : f) d = std::max(d, detail::circular(v));
    const u128 err = static_cast<u128>(2) * x;
    if (d <= detail::saturating_add(out.upper, err)) out.candidates.push_back({x, d});
    out.upper = std::min(out.upper, detail::saturating_add(d, err));
    if (x == last) break;
    for (std::size_t j = 0; j < F.size(); ++j) f[j] += F[j];
  }
  return out;
}

unsigned worker_count(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

}  // namespace

Integer nearest_integer(const Rational& q) { return detail::round_half_even(q); }

std::vector<MinimalPoint> best_approx_sequence(const TargetNumber& xi, int n, const Integer& x_max,
                                               const ScanOptions& opt) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (x_max < 1) throw DomainError("x_max must be at least 1");
  if (x_max > Integer("1000000000000")) throw DomainError("x_max above 10^12 is not supported");
  const auto limit = static_cast<std::uint64_t>(mpz_get_ui(x_max.get_mpz_t()));

  std::vector<u128> F;
  for (int j = 1; j <= n; ++j) F.push_back(detail::scaled_fraction(xi, static_cast<unsigned>(j)));

  const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(opt.jobs), limit));
  std::vector<ChunkResult> chunks(jobs);
  const std::uint64_t step = limit / jobs;
  auto bounds = [&](unsigned k) {
    std::uint64_t a = 1 + step * k;
    std::uint64_t b = (k + 1 == jobs) ? limit : step * (k + 1);
    return std::make_pair(a, b);
  };
  if (jobs == 1) {
    chunks[0] = scan_chunk(F, 1, limit);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) {
      pool.emplace_back([&, k] {
        auto [a, b] = bounds(k);
        chunks[k] = scan_chunk(F, a, b);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Sequential merge: a chunk's candidates must also pass the bound of all earlier chunks.
  std::vector<std::uint64_t> candidates;
  u128 prefix = ~static_cast<u128>(0);
  for (const auto& chunk : chunks) {
    for (const Candidate& c : chunk.candidates) {
      if (c.d <= detail::saturating_add(prefix, static_cast<u128>(2) * c.x)) candidates.push_back(c.x);
    }
    prefix = std::min(prefix, chunk.upper);
  }

  detail::FormEvaluator ev(xi, opt.max_bits);
  std::vector<MinimalPoint> records;
  std::vector<detail::Form> best_terms;
  for (const std::uint64_t xv : candidates) {
    const Integer x(static_cast<unsigned long>(xv));
    std::vector<detail::Form> terms;
    MinimalPoint p;
    p.n = n;
    p.coords.push_back(x);
    for (int j = 1; j <= n; ++j) {
      Integer y = ev.nearest_multiple(x, static_cast<unsigned>(j));
      detail::Form t(static_cast<std::size_t>(j) + 1, Integer(0));
      t[0] = -y;
      t[static_cast<std::size_t>(j)] = x;
      terms.push_back(std::move(t));
      p.coords.push_back(y);
    }
    if (!records.empty()) {
      int cmp = ev.compare_max_abs(terms, best_terms);
      if (cmp > 0) continue;
      if (cmp == 0) {
        records.back().tie = true;
        continue;
      }
    }
    p.error = ev.abs_value(terms[ev.argmax_abs(terms)]);
    best_terms = std::move(terms);
    records.push_back(std::move(p));
  }
  return records;
}

std::string to_line(const MinimalPoint& p, int significant) {
  std::ostringstream os;
  for (const Integer& c : p.coords) os << c.get_str() << ' ';
  os << to_scientific_interval(p.error, significant);
  return os.str();
}

MinimalPoint parse_minimal_point(const std::string& line) {
  MinimalPoint p;
  const auto bracket = line.find('[');
  std::istringstream is(line.substr(0, bracket));
  std::string tok;
  while (is >> tok) {
    Integer z;
    if (z.set_str(tok, 10) != 0) throw InputError("bad coordinate '" + tok + "'");
    p.coords.push_back(z);
  }
  if (p.coords.size() < 2) throw InputError("a point needs x and at least one y");
  p.n = static_cast<int>(p.coords.size()) - 1;
  if (bracket != std::string::npos) {
    const auto close = line.find(']', bracket);
    const auto comma = line.find(',', bracket);
    if (close == std::string::npos || comma == std::string::npos || comma > close) {
      throw InputError("bad error interval in '" + line + "'");
    }
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    p.error = RealInterval(parse_rational(trim(line.substr(bracket + 1, comma - bracket - 1))),
                           parse_rational(trim(line.substr(comma + 1, close - comma - 1))));
  }
  return p;
}

MinimalPoint make_point(const std::vector<long>& coords) {
  if (coords.size() < 2) throw DomainError("a point needs x and at least one y");
  MinimalPoint p;
  for (long c : coords) p.coords.emplace_back(c);
  p.n = static_cast<int>(coords.size()) - 1;
  return p;
}

}  // namespace wirsing
