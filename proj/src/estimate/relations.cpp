#include <functional>

#include "json.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/estimate.hpp"

namespace wirsing {

std::string to_string(RelationVerdict v) {
  switch (v) {
    case RelationVerdict::HOLDS:
      return "HOLDS";
    case RelationVerdict::VIOLATED_AT_FINITE_SCALE:
      return "VIOLATED_AT_FINITE_SCALE";
    case RelationVerdict::NOT_APPLICABLE:
      return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

namespace {

struct Ref {
  EstimateKind kind;
  long index;
};

std::string label(const Ref& r) { return to_string(r.kind) + "_" + std::to_string(r.index); }

struct Relation {
  FormulaId id;
  std::string statement;
  std::vector<Ref> uses;
  bool needs_gate;  // lambda_hat_n > 1/(n-m) and 1 <= m < (n-1)/2
  // Returns {lhs, rhs} for lhs >= rhs.
  std::function<std::pair<RealInterval, RealInterval>(const std::function<RealInterval(const Ref&)>&)> eval;
};

}  // namespace

std::vector<RelationReport> verify_relations(const std::vector<ExponentEstimate>& estimates, long n, long m,
                                             bool target_algebraic) {
  if (n < 1) throw DomainError("n must be at least 1");
  auto find = [&](const Ref& r) -> const ExponentEstimate& {
    for (const auto& e : estimates) {
      if (e.kind == r.kind && e.n == r.index) return e;
    }
    throw InputError("missing estimate " + label(r));
  };
  const Ref lh{EstimateKind::LAMBDA_HAT, n};
  const Ref la{EstimateKind::LAMBDA, n};
  const Ref w_n{EstimateKind::W, n};
  const Ref wh_n{EstimateKind::W_HAT, n};
  const Ref ws_n{EstimateKind::W_STAR, n};
  const Ref w_k{EstimateKind::W, n - m};
  const Ref wh_k{EstimateKind::W_HAT, n - m};
  const Ref w_m1{EstimateKind::W, m + 1};

  using Get = std::function<RealInterval(const Ref&)>;
  auto transfer = [n](FormulaId id, std::optional<RealInterval> w, std::optional<RealInterval> wh,
                      std::optional<RealInterval> l) {
    TransferArgs a;
    a.n = n;
    a.w = std::move(w);
    a.w_hat = std::move(wh);
    a.lam_hat = std::move(l);
    return transfer_rhs(id, a);
  };
  std::vector<Relation> rels{
      {FormulaId::H11, "w_hat_{n-m} >= ((n-m) lh + n-2m-1) / (1 - m lh)", {lh, wh_k}, true,
       [&](const Get& g) { return std::make_pair(g(wh_k), rhs_h11(n, m, g(lh))); }},
      {FormulaId::H21, "w_{n-m} >= max(((n-m) lh + n-2m-2) / (1-(m+1) lh), ((n-m) l + n-2m-1) / (1 - m l))",
       {lh, la, w_k}, true, [&](const Get& g) { return std::make_pair(g(w_k), rhs_h21(n, m, g(lh), g(la))); }},
      {FormulaId::VERYNEW, "(n-m-1)/(m+1) ((n-m) lh + n-2m-1) / ((n-m) lh - 1) >= w_{n-m}", {lh, w_k}, true,
       [&](const Get& g) { return std::make_pair(rhs_verynew(n, m, g(lh)), g(w_k)); }},
      {FormulaId::WINDAG, "1 / lh >= w_{m+1}", {lh, w_m1}, true,
       [&](const Get& g) { return std::make_pair(rhs_windag(n, m, g(lh)), g(w_m1)); }},
      {FormulaId::TOLL, "w*_n >= 3/2 w_hat_n - n + 1/2", {ws_n, wh_n}, false,
       [&](const Get& g) {
         return std::make_pair(g(ws_n), transfer(FormulaId::TOLL, std::nullopt, g(wh_n), std::nullopt));
       }},
      {FormulaId::DAVSCHM, "w*_n >= 1 / lambda_hat_n", {ws_n, lh}, false,
       [&](const Get& g) {
         return std::make_pair(g(ws_n), transfer(FormulaId::DAVSCHM, std::nullopt, std::nullopt, g(lh)));
       }},
      {FormulaId::TOLLER_1, "w*_n >= (w_n + 1) / 2", {ws_n, w_n}, false,
       [&](const Get& g) {
         return std::make_pair(g(ws_n), transfer(FormulaId::TOLLER_1, g(w_n), std::nullopt, std::nullopt));
       }},
      {FormulaId::TOLLER_2, "w*_n >= w_n - n + 1", {ws_n, w_n}, false,
       [&](const Get& g) {
         return std::make_pair(g(ws_n), transfer(FormulaId::TOLLER_2, g(w_n), std::nullopt, std::nullopt));
       }},
      {FormulaId::TOLLER_3, "w*_n >= w_hat_n / (w_hat_n - n + 1)", {ws_n, wh_n}, false,
       [&](const Get& g) {
         return std::make_pair(g(ws_n), transfer(FormulaId::TOLLER_3, std::nullopt, g(wh_n), std::nullopt));
       }},
      {FormulaId::STRONG_TOLL, "w*_n >= w_n / 2 + w_hat_n - n + 1/2", {ws_n, w_n, wh_n}, false,
       [&](const Get& g) {
         return std::make_pair(g(ws_n), transfer(FormulaId::STRONG_TOLL, g(w_n), g(wh_n), std::nullopt));
       }},
  };

  // Every referenced estimate must be supplied, whatever the gates decide.
  for (const auto& r : rels) {
    for (const auto& u : r.uses) find(u);
  }

  const bool m_ok = m >= 1 && 2 * m < n - 1;
  std::vector<RelationReport> out;
  for (const auto& r : rels) {
    RelationReport rep;
    rep.relation_id = r.id;
    rep.note = r.statement;
    auto skip = [&](const std::string& why) {
      rep.verdict = RelationVerdict::NOT_APPLICABLE;
      rep.note = r.statement + "; " + why;
      out.push_back(rep);
    };
    if (target_algebraic) {
      skip("the target is algebraic, the relation assumes a transcendental number");
      continue;
    }
    std::string bad;
    for (const auto& u : r.uses) {
      const auto& e = find(u);
      if (e.status != EstimateStatus::FINITE) {
        bad = label(u) + " is " + to_string(e.status);
        break;
      }
    }
    if (!bad.empty()) {
      skip(bad);
      continue;
    }
    if (r.needs_gate) {
      if (!m_ok) {
        skip("needs 1 <= m < (n-1)/2");
        continue;
      }
      const RealInterval& l = find(lh).value;
      if (!(l.lo() > make_rational(1, n - m))) {
        skip("hypothesis lambda_hat_n > 1/(n-m) = " + to_string(make_rational(1, n - m)) + " not met by estimate " +
             to_decimal_interval(l, 6));
        continue;
      }
    }
    try {
      auto [lhs, rhs] = r.eval([&](const Ref& u) { return find(u).value; });
      rep.lhs = lhs;
      rep.rhs = rhs;
      rep.slack = lhs - rhs;
      rep.verdict = rep.slack.hi() >= 0 ? RelationVerdict::HOLDS : RelationVerdict::VIOLATED_AT_FINITE_SCALE;
      out.push_back(rep);
    } catch (const DomainError& ex) {
      skip(ex.what());
    }
  }
  return out;
}

std::string relations_to_json(const std::vector<RelationReport>& reports, int digits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json row;
    row["relation_id"] = to_string(r.relation_id);
    const bool has = r.verdict != RelationVerdict::NOT_APPLICABLE;
    row["lhs"] = has ? nlohmann::ordered_json(to_decimal_interval(r.lhs, digits)) : nlohmann::ordered_json(nullptr);
    row["rhs"] = has ? nlohmann::ordered_json(to_decimal_interval(r.rhs, digits)) : nlohmann::ordered_json(nullptr);
    row["slack"] = has ? nlohmann::ordered_json(to_decimal_interval(r.slack, digits)) : nlohmann::ordered_json(nullptr);
    row["verdict"] = to_string(r.verdict);
    row["note"] = r.note;
    arr.push_back(row);
  }
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["relations"] = arr;
  return doc.dump(2);
}

std::string estimate_to_json(const ExponentEstimate& e, int digits) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["kind"] = to_string(e.kind);
  j["n"] = e.n;
  j["status"] = to_string(e.status);
  if (e.status == EstimateStatus::FINITE) {
    j["value"] = to_decimal_interval(e.value, digits);
  } else {
    j["value"] = nullptr;
  }
  j["window"] = {e.window.first, e.window.second};
  j["stability"] = e.stability;
  if (e.slope) {
    j["slope"] = *e.slope;
  } else {
    j["slope"] = nullptr;
  }
  j["note"] = e.note;
  return j.dump(2);
}

}  // namespace wirsing
