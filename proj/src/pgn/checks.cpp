#include <map>
#include <set>
#include <tuple>

#include "wirsing/errors.hpp"
#include "wirsing/pgn.hpp"

namespace wirsing {

namespace {

void add_row(CheckReport& r, std::string name, int l, std::optional<Rational> Q, RealInterval margin) {
  CheckRow row{std::move(name), l, std::move(Q), std::move(margin), false};
  row.pass = row.margin.hi() >= 0;
  r.all_pass = r.all_pass && row.pass;
  r.rows.push_back(std::move(row));
}

}  // namespace

CheckReport check_duality(const std::vector<PsiSample>& samples, const Rational& tolerance) {
  using Key = std::tuple<int, Rational, int>;  // N, Q, l
  std::map<Key, const PsiSample*> primal;
  std::map<Key, const PsiSample*> dual;
  for (const auto& s : samples) {
    auto& side = s.side == PsiSide::PRIMAL ? primal : dual;
    side[{s.N, s.Q, s.l}] = &s;
  }
  for (const auto& [k, s] : primal) {
    const auto [N, Q, l] = k;
    if (!dual.count({N, Q, N + 2 - l})) {
      throw InputError("primal sample N=" + std::to_string(N) + " l=" + std::to_string(l) + " Q=" + to_string(Q) +
                       " has no dual partner");
    }
  }
  CheckReport r;
  for (const auto& [k, s] : dual) {
    const auto [N, Q, l] = k;
    auto it = primal.find({N, Q, N + 2 - l});
    if (it == primal.end()) {
      throw InputError("dual sample N=" + std::to_string(N) + " l=" + std::to_string(l) + " Q=" + to_string(Q) +
                       " has no primal partner");
    }
    const RealInterval sum = s->value + it->second->value;
    add_row(r, "duality", l, Q, RealInterval(tolerance) - sum.abs());
  }
  return r;
}

CheckReport check_sses(const std::vector<PsiSample>& samples) {
  // N -> l -> (Q -> value)
  std::map<int, std::map<int, std::map<Rational, RealInterval>>> grid;
  for (const auto& s : samples) {
    if (s.side == PsiSide::PRIMAL) grid[s.N][s.l][s.Q] = s.value;
  }
  if (grid.empty()) throw InputError("no primal samples to check");
  CheckReport r;
  for (const auto& [N, by_l] : grid) {
    auto top = by_l.find(N + 1);
    if (top == by_l.end()) throw InputError("samples for l = N+1 = " + std::to_string(N + 1) + " are required");
    std::set<Rational> qs;
    for (const auto& [q, v] : top->second) qs.insert(q);
    std::map<int, std::pair<RealInterval, RealInterval>> limits;  // l -> (lower, upper)
    for (const auto& [l, values] : by_l) {
      std::set<Rational> mine;
      for (const auto& [q, v] : values) mine.insert(q);
      if (mine != qs) throw InputError("l = " + std::to_string(l) + " does not cover the Q-grid of l = N+1");
      RealInterval lo = values.begin()->second;
      RealInterval hi = lo;
      for (const auto& [q, v] : values) {
        lo = min(lo, v);
        hi = max(hi, v);
      }
      limits[l] = {lo, hi};
    }
    const auto [low_top, up_top] = limits[N + 1];
    for (const auto& [l, lim] : limits) {
      const auto& [low, up] = lim;
      add_row(r, "sses_upper", l, std::nullopt, l * up + (N + 1 - l) * low_top);
      add_row(r, "sses_lower", l, std::nullopt, l * low + (N + 1 - l) * up_top);
      auto next = limits.find(l + 1);
      if (next != limits.end()) add_row(r, "chain", l, std::nullopt, up - next->second.first);
    }
  }
  return r;
}

}  // namespace wirsing
