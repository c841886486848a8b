// Command-line front end: certified bounds, record scans, successive minima and exponent checks.

#include <cmath>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "wirsing/bounds.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/estimate.hpp"
#include "wirsing/minpoints.hpp"
#include "wirsing/pgn.hpp"
#include "wirsing/target.hpp"

using namespace wirsing;
using Json = nlohmann::ordered_json;

namespace {

enum class Format { TEXT, JSON, CSV, TSV };

struct Config {
  std::optional<int> digits;
  std::string format = "text";
  bool json = false;
  std::string export_format;
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  long max_bits = 1L << 13;

  std::string target;
  std::optional<long> n;
  std::optional<long> m;
  std::string x_max = "1000000";
  std::optional<long> h_max;

  // bound
  std::string formula = "PHI";
  std::optional<std::string> lam;
  std::optional<std::string> lam_hat;
  std::optional<std::string> w;
  std::optional<std::string> w_hat;
  std::optional<std::string> t;

  // table
  std::vector<long> ns{4, 5, 10, 20, 24, 25, 30, 50, 100, 1000};

  // psi
  std::optional<int> N;
  std::optional<int> l;
  std::vector<std::string> Q;
  std::string side = "primal";
  std::optional<long> search_bound;
  std::string check;
  std::string tolerance = "0.2";

  // estimate
  std::string kind = "all";

  Format fmt() const {
    if (json) return Format::JSON;
    if (export_format == "tsv") return Format::TSV;
    if (format == "json") return Format::JSON;
    if (format == "csv") return Format::CSV;
    if (format == "tsv") return Format::TSV;
    return Format::TEXT;
  }
  int digits_or(int fallback) const { return digits.value_or(fallback); }
  ScanOptions scan() const {
    ScanOptions s;
    s.jobs = jobs;
    s.max_bits = max_bits;
    return s;
  }
};

// ---------------------------------------------------------------------------
// Output helpers

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, Format f) const {
    if (f == Format::TEXT) {
      std::vector<std::size_t> width(header_.size(), 0);
      for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
      for (const auto& r : rows_) {
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
          out << r[c];
          if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
        }
        out << '\n';
      };
      line(header_);
      for (const auto& r : rows_) line(r);
      return;
    }
    const char sep = f == Format::CSV ? ',' : '\t';
    auto cell = [&](const std::string& s) {
      if (f == Format::CSV && s.find_first_of(",\"") != std::string::npos) {
        std::string q = "\"";
        for (char ch : s) {
          if (ch == '"') q += '"';
          q += ch;
        }
        return q + "\"";
      }
      return s;
    };
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? std::string(1, sep) : "") << cell(r[c]);
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json integers_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(integer_json(z));
  return a;
}

std::string join(const std::vector<Integer>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

std::string sci_lo(const RealInterval& v, int sig) { return to_scientific(v.lo(), sig, false); }
std::string sci_hi(const RealInterval& v, int sig) { return to_scientific(v.hi(), sig, true); }

Json interval_json(const RealInterval& v, int sig) { return Json::array({sci_lo(v, sig), sci_hi(v, sig)}); }

// -log(err) / log(scale) as a plotting coordinate; not certified.
std::string ratio_column(const RealInterval& err, const Integer& scale) {
  if (scale < 2 || err.hi() == 0) return "nan";
  const double e = err.midpoint().get_d();
  if (!(e > 0)) return "inf";
  std::ostringstream s;
  s.precision(10);
  s << -std::log(e) / std::log(scale.get_d());
  return s.str();
}

Json document(const std::string& command, const Config& c) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  if (!c.target.empty()) j["target"] = c.target;
  j["seed"] = c.seed;
  return j;
}

// ---------------------------------------------------------------------------
// Argument parsing helpers

Rational rational_arg(const std::optional<std::string>& v, const char* name) {
  if (!v) throw InputError(std::string("--") + name + " is required");
  return parse_rational(*v);
}

long require(const std::optional<long>& v, const char* name) {
  if (!v) throw InputError(std::string("--") + name + " is required");
  return *v;
}

Integer integer_arg(const std::string& text, const char* name) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1) throw InputError(std::string("--") + name + " must be an integer, got " + text);
  return q.get_num();
}

TargetPtr target_of(const Config& c) {
  if (c.target.empty()) throw InputError("--target is required");
  return parse_target(c.target);
}

// Default height cap keeps the (2h+1)^n form box near 10^6 vectors.
long default_h_max(long n) {
  return std::max(2L, static_cast<long>(std::floor(std::pow(10.0, 6.0 / static_cast<double>(n)))));
}

// ---------------------------------------------------------------------------
// bound / constants / table

BoundReport evaluate_formula(const Config& c, int digits) {
  const FormulaId id = formula_id_from_string(c.formula);
  std::map<std::string, Rational> params;
  auto pn = [&] {
    const long n = require(c.n, "n");
    params["n"] = n;
    return n;
  };
  auto pm = [&] {
    const long m = require(c.m, "m");
    params["m"] = m;
    return m;
  };
  auto pq = [&](const std::optional<std::string>& v, const char* name, const char* key) {
    Rational q = rational_arg(v, name);
    params[key] = q;
    return RealInterval(q);
  };
  switch (id) {
    case FormulaId::PHI: {
      const long n = pn();
      if (c.m) return phi_bound(*c.m, n, digits);
      return phi_bound(best_m(n).best_m, n, digits);
    }
    case FormulaId::EQUILIBRIUM: {
      const long n = pn();
      const long m = pm();
      AlgebraicReal a = equilibrium_lambda(m, n);
      return make_report(id, params, digits, [&](const Rational& w) { return a.refined(w).isolating_interval(); });
    }
    case FormulaId::F: {
      RealInterval t = pq(c.t, "t", "t");
      return make_report(id, params, digits, [&](const Rational& w) { return eval_F(t, w); });
    }
    case FormulaId::G: {
      RealInterval t = pq(c.t, "t", "t");
      return make_report(id, params, digits, [&](const Rational& w) { return eval_G(t, w); });
    }
    case FormulaId::C_GAMMA: {
      RealInterval t = pq(c.t, "t", "gamma");
      return make_report(id, params, digits, [&](const Rational& w) { return eval_c(t, w); });
    }
    case FormulaId::R: {
      RealInterval lam = pq(c.lam, "lam", "lambda");
      return make_report(id, params, digits, [&](const Rational& w) { return eval_R(lam, w); });
    }
    case FormulaId::S: {
      RealInterval lam = pq(c.lam, "lam", "lambda");
      bool at_limit = false;
      BoundReport r = make_report(id, params, digits, [&](const Rational& w) { return eval_S(lam, w, &at_limit); });
      if (at_limit) r.flags.push_back("limit");
      return r;
    }
    case FormulaId::H11:
    case FormulaId::VERYNEW:
    case FormulaId::WINDAG: {
      const long n = pn();
      const long m = pm();
      RealInterval lh = pq(c.lam_hat, "lam-hat", "lambda_hat");
      return make_report(id, params, digits, [&](const Rational&) {
        if (id == FormulaId::H11) return rhs_h11(n, m, lh);
        if (id == FormulaId::VERYNEW) return rhs_verynew(n, m, lh);
        return rhs_windag(n, m, lh);
      });
    }
    case FormulaId::H21: {
      const long n = pn();
      const long m = pm();
      RealInterval lh = pq(c.lam_hat, "lam-hat", "lambda_hat");
      RealInterval l = pq(c.lam, "lam", "lambda");
      return make_report(id, params, digits, [&](const Rational&) { return rhs_h21(n, m, lh, l); });
    }
    case FormulaId::EVEN_N_LOWER: {
      const long n = pn();
      RealInterval lh = pq(c.lam_hat, "lam-hat", "lambda_hat");
      RealInterval l = pq(c.lam, "lam", "lambda");
      return make_report(id, params, digits, [&](const Rational&) { return even_n_lower(n, lh, l); });
    }
    case FormulaId::EVEN_N_UPPER: {
      const long n = pn();
      RealInterval lh = pq(c.lam_hat, "lam-hat", "lambda_hat");
      return make_report(id, params, digits, [&](const Rational&) { return even_n_upper(n, lh); });
    }
    case FormulaId::TOLL:
    case FormulaId::DAVSCHM:
    case FormulaId::TOLLER_1:
    case FormulaId::TOLLER_2:
    case FormulaId::TOLLER_3:
    case FormulaId::STRONG_TOLL: {
      TransferArgs a;
      a.n = pn();
      if (c.w) a.w = pq(c.w, "w", "w");
      if (c.w_hat) a.w_hat = pq(c.w_hat, "w-hat", "w_hat");
      if (c.lam_hat) a.lam_hat = pq(c.lam_hat, "lam-hat", "lambda_hat");
      return make_report(id, params, digits, [&](const Rational&) { return transfer_rhs(id, a); });
    }
    case FormulaId::CONSISTENCY_MAX: {
      const long n = pn();
      const long m = pm();
      AlgebraicReal a = consistency_max_lambda(n, m);
      return make_report(id, params, digits, [&](const Rational& w) { return a.refined(w).isolating_interval(); });
    }
    case FormulaId::GAMMA0:
      return make_report(id, params, digits, [](const Rational& w) { return gamma0().refined(w).isolating_interval(); });
    case FormulaId::DELTA:
      return make_report(id, params, digits, [](const Rational& w) { return delta(w); });
    case FormulaId::ALPHA0:
      return make_report(id, params, digits, [](const Rational& w) { return alpha0().refined(w).isolating_interval(); });
    case FormulaId::INV_SQRT3:
      return make_report(id, params, digits, [](const Rational& w) { return inv_sqrt3(w); });
  }
  throw InputError("formula " + c.formula + " is not available from the command line");
}

std::string params_text(const BoundReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
  return s;
}

void write_reports(std::ostream& out, const Config& c, const std::string& command, const std::vector<std::string>& names,
                   const std::vector<BoundReport>& reports) {
  const Format f = c.fmt();
  if (f == Format::JSON) {
    Json doc = document(command, c);
    Json arr = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      Json r = Json::parse(report_to_json(reports[i]));
      r.erase("schema_version");
      if (!names[i].empty()) r["name"] = names[i];
      arr.push_back(r);
    }
    doc["reports"] = arr;
    out << doc.dump(2) << '\n';
    return;
  }
  if (f == Format::TEXT) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      std::string label = names[i].empty() ? to_string(r.formula_id) : names[i];
      const std::string p = params_text(r);
      if (!p.empty()) label += "(" + p + ")";
      out << label << " = " << r.display;
      for (const auto& flag : r.flags) out << " [" << flag << "]";
      out << '\n';
    }
    return;
  }
  Table t({"name", "formula_id", "params", "display", "lo", "hi", "flags"});
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::string flags;
    for (const auto& flag : r.flags) flags += (flags.empty() ? "" : ";") + flag;
    t.add({names[i], to_string(r.formula_id), params_text(r), r.display, to_decimal_down(r.value.lo(), 40),
           to_decimal_up(r.value.hi(), 40), flags});
  }
  t.write(out, f);
}

void cmd_bound(const Config& c, std::ostream& out) {
  BoundReport r = evaluate_formula(c, c.digits_or(2));
  write_reports(out, c, "bound", {""}, {r});
}

void cmd_constants(const Config& c, std::ostream& out) {
  const int d = c.digits_or(4);
  std::vector<std::string> names{"gamma0", "delta", "alpha0", "inv_sqrt3", "consistency_max_4_1"};
  std::vector<BoundReport> rs;
  for (FormulaId id : {FormulaId::GAMMA0, FormulaId::DELTA, FormulaId::ALPHA0, FormulaId::INV_SQRT3}) {
    Config k = c;
    k.formula = to_string(id);
    rs.push_back(evaluate_formula(k, d));
  }
  Config k = c;
  k.formula = "CONSISTENCY_MAX";
  k.n = 4;
  k.m = 1;
  rs.push_back(evaluate_formula(k, d));
  write_reports(out, c, "constants", names, rs);
}

void cmd_table(const Config& c, std::ostream& out) {
  auto rows = bs_table(c.ns);
  if (c.fmt() == Format::JSON) {
    Json doc = document("table", c);
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["n"] = r.n;
      row["bs"] = r.bs_value;
      row["tsi"] = r.tsi_reference ? Json(*r.tsi_reference) : Json(nullptr);
      arr.push_back(row);
    }
    doc["rows"] = arr;
    out << doc.dump(2) << '\n';
    return;
  }
  Table t({"n", "tsi", "bs"});
  for (const auto& r : rows) t.add({std::to_string(r.n), r.tsi_reference.value_or("-"), r.bs_value});
  t.write(out, c.fmt());
}

// ---------------------------------------------------------------------------
// Record scans

void cmd_minpoints(const Config& c, std::ostream& out) {
  auto xi = target_of(c);
  const int n = static_cast<int>(require(c.n, "n"));
  const int sig = c.digits_or(6);
  auto seq = best_approx_sequence(*xi, n, integer_arg(c.x_max, "xmax"), c.scan());
  const Format f = c.fmt();
  if (f == Format::JSON) {
    Json doc = document("minpoints", c);
    doc["n"] = n;
    doc["x_max"] = c.x_max;
    Json arr = Json::array();
    for (const auto& p : seq) {
      Json r;
      r["coords"] = integers_json(p.coords);
      r["error"] = interval_json(p.error, sig);
      r["hankel_defect"] = hankel_defect(p);
      r["tie"] = p.tie;
      arr.push_back(r);
    }
    doc["points"] = arr;
    out << doc.dump(2) << '\n';
    return;
  }
  if (f == Format::TEXT) {
    for (const auto& p : seq) out << to_line(p, sig) << '\n';
    return;
  }
  std::vector<std::string> header{"index", "x"};
  for (int j = 1; j <= n; ++j) header.push_back("y" + std::to_string(j));
  for (const char* h : {"error_lo", "error_hi", "neg_log_error_over_log_x", "hankel_defect", "tie"}) header.push_back(h);
  Table t(header);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& p = seq[i];
    std::vector<std::string> row{std::to_string(i)};
    for (const auto& z : p.coords) row.push_back(z.get_str());
    row.push_back(sci_lo(p.error, sig));
    row.push_back(sci_hi(p.error, sig));
    row.push_back(ratio_column(p.error, p.x()));
    row.push_back(std::to_string(hankel_defect(p)));
    row.push_back(p.tie ? "1" : "0");
    t.add(row);
  }
  t.write(out, f);
}

void cmd_forms(const Config& c, std::ostream& out) {
  auto xi = target_of(c);
  const int n = static_cast<int>(require(c.n, "n"));
  const int sig = c.digits_or(6);
  const long h = c.h_max.value_or(default_h_max(n));
  auto seq = best_linear_form_sequence(*xi, n, h, c.scan());
  const Format f = c.fmt();
  if (f == Format::JSON) {
    Json doc = document("forms", c);
    doc["n"] = n;
    doc["h_max"] = h;
    Json arr = Json::array();
    for (const auto& r : seq) {
      Json row;
      row["coeffs"] = integers_json(r.coeffs);
      row["height"] = integer_json(r.height);
      row["value"] = interval_json(r.value, sig);
      row["exact_zero"] = r.exact_zero;
      row["tie"] = r.tie;
      arr.push_back(row);
    }
    doc["forms"] = arr;
    out << doc.dump(2) << '\n';
    return;
  }
  Table t({"index", "height", "coeffs", "value_lo", "value_hi", "neg_log_value_over_log_height", "exact_zero"});
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& r = seq[i];
    RealInterval v = r.exact_zero ? RealInterval(Rational(0)) : r.value;
    t.add({std::to_string(i), r.height.get_str(), join(r.coeffs), sci_lo(v, sig), sci_hi(v, sig),
           ratio_column(v, r.height), r.exact_zero ? "1" : "0"});
  }
  t.write(out, f);
}

void cmd_approximants(const Config& c, std::ostream& out) {
  auto xi = target_of(c);
  const int n = static_cast<int>(require(c.n, "n"));
  const int sig = c.digits_or(6);
  const long h = c.h_max.value_or(default_h_max(n));
  ApproximantOptions opt;
  opt.scan = c.scan();
  auto seq = algebraic_approximant_sequence(*xi, n, h, opt);
  const Format f = c.fmt();
  if (f == Format::JSON) {
    Json doc = document("approximants", c);
    doc["n"] = n;
    doc["h_max"] = h;
    Json arr = Json::array();
    for (const auto& a : seq) {
      Json row;
      row["polynomial"] = integers_json(a.alpha.polynomial().coefficients());
      row["height"] = integer_json(a.height);
      row["alpha"] = interval_json(a.alpha.enclosure(64), 20);
      row["distance"] = interval_json(a.distance, sig);
      row["exact_hit"] = a.exact_hit;
      row["irreducibility_uncertified"] = a.irreducibility_uncertified;
      row["tie"] = a.tie;
      arr.push_back(row);
    }
    doc["approximants"] = arr;
    out << doc.dump(2) << '\n';
    return;
  }
  Table t({"index", "height", "degree", "polynomial", "distance_lo", "distance_hi", "neg_log_distance_over_log_height",
           "exact_hit"});
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& a = seq[i];
    RealInterval d = a.exact_hit ? RealInterval(Rational(0)) : a.distance;
    t.add({std::to_string(i), a.height.get_str(), std::to_string(a.degree()), a.alpha.polynomial().to_string(),
           sci_lo(d, sig), sci_hi(d, sig), ratio_column(d, a.height), a.exact_hit ? "1" : "0"});
  }
  t.write(out, f);
}

// ---------------------------------------------------------------------------
// Successive minima

void cmd_psi(const Config& c, std::ostream& out) {
  auto xi = target_of(c);
  if (!c.N) throw InputError("--N is required");
  const int N = *c.N;
  if (c.Q.empty()) throw InputError("--Q is required");
  if (c.side != "primal" && c.side != "dual" && c.side != "both") throw InputError("--side must be primal, dual or both");
  std::vector<PsiSide> sides;
  if (c.side != "dual") sides.push_back(PsiSide::PRIMAL);
  if (c.side != "primal") sides.push_back(PsiSide::DUAL);
  const int digits = c.digits_or(12);

  std::vector<PsiSample> samples;
  for (const auto& qtext : c.Q) {
    const Rational Q = parse_rational(qtext);
    for (PsiSide s : sides) {
      const long bound = c.search_bound.value_or(
          s == PsiSide::PRIMAL ? 200000L
                               : std::max(3L, static_cast<long>(std::ceil(3 * std::pow(Q.get_d(), 1.0 / N)))));
      if (c.l) {
        samples.push_back(s == PsiSide::PRIMAL ? psi_empirical(*xi, N, *c.l, Q, bound)
                                               : psi_star_empirical(*xi, N, *c.l, Q, bound));
      } else {
        for (auto& p : psi_all(*xi, N, Q, bound, s)) samples.push_back(std::move(p));
      }
    }
  }

  std::optional<CheckReport> report;
  if (c.check == "duality") {
    report = check_duality(samples, parse_rational(c.tolerance));
  } else if (c.check == "sses") {
    report = check_sses(samples);
  } else if (!c.check.empty()) {
    throw InputError("--check must be duality or sses");
  }

  const Format f = c.fmt();
  if (f == Format::JSON) {
    Json doc = document("psi", c);
    Json arr = Json::array();
    for (const auto& s : samples) {
      Json row;
      row["Q"] = to_string(s.Q);
      row["N"] = s.N;
      row["l"] = s.l;
      row["side"] = to_string(s.side);
      row["value"] = Json::array({to_decimal_down(s.value.lo(), digits), to_decimal_up(s.value.hi(), digits)});
      row["truncated"] = s.truncated;
      Json wit = Json::array();
      for (const auto& v : s.witnesses) wit.push_back(integers_json(v));
      row["witnesses"] = wit;
      arr.push_back(row);
    }
    doc["samples"] = arr;
    if (report) {
      Json rows = Json::array();
      for (const auto& r : report->rows) {
        Json row;
        row["name"] = r.name;
        row["l"] = r.l;
        row["Q"] = r.Q ? Json(to_string(*r.Q)) : Json(nullptr);
        row["margin"] = Json::array({to_decimal_down(r.margin.lo(), digits), to_decimal_up(r.margin.hi(), digits)});
        row["pass"] = r.pass;
        rows.push_back(row);
      }
      doc["check"] = {{"kind", c.check}, {"all_pass", report->all_pass}, {"rows", rows}};
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (f == Format::TSV) {
    out << samples_to_tsv(samples, true, digits);
  } else {
    Table t({"Q", "N", "l", "side", "lo", "hi", "truncated", "witnesses"});
    for (const auto& s : samples) {
      std::string wit;
      for (const auto& v : s.witnesses) wit += (wit.empty() ? "" : "; ") + join(v, ",");
      t.add({to_string(s.Q), std::to_string(s.N), std::to_string(s.l), to_string(s.side),
             to_decimal_down(s.value.lo(), digits), to_decimal_up(s.value.hi(), digits), s.truncated ? "1" : "0",
             f == Format::CSV ? wit : "(" + wit + ")"});
    }
    t.write(out, f);
  }
  if (report) {
    out << (f == Format::TEXT ? "\n" : "");
    Table t({"check", "l", "Q", "margin_lo", "margin_hi", "pass"});
    for (const auto& r : report->rows) {
      t.add({r.name, std::to_string(r.l), r.Q ? to_string(*r.Q) : "-", to_decimal_down(r.margin.lo(), digits),
             to_decimal_up(r.margin.hi(), digits), r.pass ? "1" : "0"});
    }
    if (f == Format::TEXT) {
      t.write(out, f);
      out << (report->all_pass ? "all checks pass\n" : "some checks fail\n");
    } else {
      t.write(std::cerr, f);
    }
  }
}

// ---------------------------------------------------------------------------
// Exponent estimates and relations

class Estimator {
 public:
  Estimator(const Config& c, TargetPtr xi) : c_(c), xi_(std::move(xi)) {}

  ExponentEstimate get(EstimateKind kind, long n) {
    switch (kind) {
      case EstimateKind::LAMBDA:
        return estimate_lambda(points(n));
      case EstimateKind::LAMBDA_HAT:
        return estimate_lambda_hat(points(n));
      case EstimateKind::W:
        return estimate_w(forms(n));
      case EstimateKind::W_HAT:
        return estimate_w_hat(forms(n));
      case EstimateKind::W_STAR:
        return estimate_w_star(approximants(n), static_cast<int>(n));
    }
    throw InputError("unknown estimate kind");
  }

 private:
  const std::vector<MinimalPoint>& points(long n) {
    auto it = points_.find(n);
    if (it == points_.end()) {
      it = points_.emplace(n, best_approx_sequence(*xi_, static_cast<int>(n), integer_arg(c_.x_max, "xmax"), c_.scan()))
               .first;
    }
    return it->second;
  }
  const std::vector<LinearFormRecord>& forms(long n) {
    auto it = forms_.find(n);
    if (it == forms_.end()) {
      const long h = c_.h_max.value_or(default_h_max(n));
      it = forms_.emplace(n, best_linear_form_sequence(*xi_, static_cast<int>(n), h, c_.scan())).first;
    }
    return it->second;
  }
  const std::vector<AlgebraicApproximant>& approximants(long n) {
    auto it = approx_.find(n);
    if (it == approx_.end()) {
      ApproximantOptions opt;
      opt.scan = c_.scan();
      const long h = c_.h_max.value_or(default_h_max(n));
      it = approx_.emplace(n, algebraic_approximant_sequence(*xi_, static_cast<int>(n), h, opt)).first;
    }
    return it->second;
  }

  const Config& c_;
  TargetPtr xi_;
  std::map<long, std::vector<MinimalPoint>> points_;
  std::map<long, std::vector<LinearFormRecord>> forms_;
  std::map<long, std::vector<AlgebraicApproximant>> approx_;
};

EstimateKind kind_from_string(const std::string& s) {
  static const std::map<std::string, EstimateKind> kinds{{"lambda", EstimateKind::LAMBDA},
                                                         {"lambda_hat", EstimateKind::LAMBDA_HAT},
                                                         {"w", EstimateKind::W},
                                                         {"w_hat", EstimateKind::W_HAT},
                                                         {"w_star", EstimateKind::W_STAR}};
  auto it = kinds.find(s);
  if (it == kinds.end()) throw InputError("unknown --kind '" + s + "'");
  return it->second;
}

void write_estimates(std::ostream& out, const Config& c, Json doc, const std::vector<ExponentEstimate>& es,
                     int digits) {
  const Format f = c.fmt();
  if (f == Format::JSON) {
    Json arr = Json::array();
    for (const auto& e : es) {
      Json j = Json::parse(estimate_to_json(e, digits));
      j.erase("schema_version");
      arr.push_back(j);
    }
    doc["estimates"] = arr;
    out << doc.dump(2) << '\n';
    return;
  }
  Table t({"kind", "n", "status", "lo", "hi", "window_first", "window_last", "stability", "slope"});
  for (const auto& e : es) {
    const bool fin = e.status == EstimateStatus::FINITE;
    std::ostringstream stab;
    stab.precision(6);
    stab << e.stability;
    std::ostringstream slope;
    slope.precision(6);
    if (e.slope) slope << *e.slope;
    t.add({to_string(e.kind), std::to_string(e.n), to_string(e.status), fin ? to_decimal_down(e.value.lo(), digits) : "-",
           fin ? to_decimal_up(e.value.hi(), digits) : "-", std::to_string(e.window.first),
           std::to_string(e.window.second), stab.str(), e.slope ? slope.str() : "-"});
  }
  t.write(out, f);
}

void cmd_estimate(const Config& c, std::ostream& out) {
  auto xi = target_of(c);
  const long n = require(c.n, "n");
  const int digits = c.digits_or(6);
  Estimator est(c, xi);
  std::vector<ExponentEstimate> es;
  if (c.kind == "all") {
    for (EstimateKind k : {EstimateKind::LAMBDA, EstimateKind::LAMBDA_HAT, EstimateKind::W, EstimateKind::W_HAT,
                           EstimateKind::W_STAR}) {
      es.push_back(est.get(k, n));
    }
  } else {
    es.push_back(est.get(kind_from_string(c.kind), n));
  }
  Json doc = document("estimate", c);
  doc["n"] = n;
  write_estimates(out, c, doc, es, digits);
}

void cmd_verify(const Config& c, std::ostream& out) {
  auto xi = target_of(c);
  const long n = require(c.n, "n");
  const long m = require(c.m, "m");
  if (n < 2 || m < 1 || m >= n - 1) throw DomainError("verify needs n >= 3 and 1 <= m <= n - 2");
  const int digits = c.digits_or(6);
  Estimator est(c, xi);
  std::vector<ExponentEstimate> es{est.get(EstimateKind::LAMBDA, n),  est.get(EstimateKind::LAMBDA_HAT, n),
                                   est.get(EstimateKind::W, n),       est.get(EstimateKind::W_HAT, n),
                                   est.get(EstimateKind::W_STAR, n)};
  std::set<std::pair<int, long>> have;
  for (const auto& e : es) have.insert({static_cast<int>(e.kind), e.n});
  for (auto [k, idx] : {std::pair{EstimateKind::W, n - m}, std::pair{EstimateKind::W_HAT, n - m},
                        std::pair{EstimateKind::W, m + 1}}) {
    if (have.insert({static_cast<int>(k), idx}).second) es.push_back(est.get(k, idx));
  }
  const bool algebraic = xi->algebraic_degree() > 0;
  auto reports = verify_relations(es, n, m, algebraic);

  const Format f = c.fmt();
  if (f == Format::JSON) {
    Json doc = document("verify", c);
    doc["n"] = n;
    doc["m"] = m;
    doc["target_algebraic"] = algebraic;
    Json ests = Json::array();
    for (const auto& e : es) {
      Json j = Json::parse(estimate_to_json(e, digits));
      j.erase("schema_version");
      ests.push_back(j);
    }
    doc["estimates"] = ests;
    doc["relations"] = Json::parse(relations_to_json(reports, digits))["relations"];
    out << doc.dump(2) << '\n';
    return;
  }
  if (f == Format::TEXT) {
    out << "target " << xi->describe() << (algebraic ? " (algebraic)" : "") << ", n=" << n << ", m=" << m << "\n\n";
    write_estimates(out, c, Json(), es, digits);
    out << '\n';
  }
  Table t({"relation", "verdict", "lhs", "rhs", "slack", "note"});
  for (const auto& r : reports) {
    const bool has = r.verdict != RelationVerdict::NOT_APPLICABLE;
    t.add({to_string(r.relation_id), to_string(r.verdict), has ? to_decimal_interval(r.lhs, digits) : "-",
           has ? to_decimal_interval(r.rhs, digits) : "-", has ? to_decimal_interval(r.slack, digits) : "-", r.note});
  }
  t.write(out, f);
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--digits", c.digits, "Displayed digits (decimals for bounds, significant digits for errors)")
      ->check(CLI::Range(0, 400));
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "tsv"}));
  sub->add_flag("--json", c.json, "Shorthand for --format json");
  sub->add_option("--export", c.export_format, "Plot-ready export (tsv)")->check(CLI::IsMember({"tsv"}));
  sub->add_option("--seed", c.seed, "Seed recorded with the run");
}

void add_scan(CLI::App* sub, Config& c) {
  sub->add_option("--target", c.target, "golden | sqrt:<k> | quad:<a>,<b>,<c> | liouville[:<b>] | e | pi | decimal:<file>")
      ->required();
  sub->add_option("--jobs", c.jobs, "Worker threads (default: all cores)");
  sub->add_option("--max-bits", c.max_bits, "Precision cap for certified comparisons")->check(CLI::Range(64L, 1L << 24));
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  c.jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App app{"Certified bounds for Wirsing's exponent and finite-scale Diophantine experiments"};
  app.require_subcommand(1);

  auto* bound = app.add_subcommand("bound", "Evaluate a certified bound (default: Phi(m, n), optimized over m)");
  add_common(bound, c);
  bound->add_option("--n", c.n, "Degree n");
  bound->add_option("--m", c.m, "Parameter m (omit to optimize)");
  bound->add_option("--formula", c.formula, "Formula id, e.g. PHI, S, H11, TOLL, CONSISTENCY_MAX");
  bound->add_option("--lam", c.lam, "lambda (rational or decimal)");
  bound->add_option("--lam-hat", c.lam_hat, "lambda hat");
  bound->add_option("--w", c.w, "w");
  bound->add_option("--w-hat", c.w_hat, "w hat");
  bound->add_option("--t", c.t, "Argument of F, G or c");

  auto* constants = app.add_subcommand("constants", "Print gamma0, delta, alpha0, 1/sqrt3 and (sqrt19 + 2)/15");
  add_common(constants, c);

  auto* table = app.add_subcommand("table", "Comparison table of the bound");
  add_common(table, c);
  table->add_option("--ns", c.ns, "Degrees n")->delimiter(',');

  auto* minpoints = app.add_subcommand("minpoints", "Best simultaneous approximation vectors");
  add_common(minpoints, c);
  add_scan(minpoints, c);
  minpoints->add_option("--n", c.n, "Dimension n")->required();
  minpoints->add_option("--xmax", c.x_max, "Largest x (integer, 1e6 notation accepted)");

  auto* forms = app.add_subcommand("forms", "Best small values of integer polynomials");
  add_common(forms, c);
  add_scan(forms, c);
  forms->add_option("--n", c.n, "Degree n")->required();
  forms->add_option("--hmax", c.h_max, "Largest height (default about 10^(6/n))");

  auto* approximants = app.add_subcommand("approximants", "Best algebraic approximations of degree <= n");
  add_common(approximants, c);
  add_scan(approximants, c);
  approximants->add_option("--n", c.n, "Degree n")->required();
  approximants->add_option("--hmax", c.h_max, "Largest height (default about 10^(6/n))");

  auto* psi = app.add_subcommand("psi", "Successive minima exponents at given Q");
  add_common(psi, c);
  add_scan(psi, c);
  psi->add_option("--N", c.N, "Dimension N (1..6)")->required();
  psi->add_option("--l", c.l, "Minimum index l (omit for all)");
  psi->add_option("--Q", c.Q, "Parameter values")->required()->delimiter(',');
  psi->add_option("--side", c.side, "primal, dual or both");
  psi->add_option("--bound", c.search_bound, "Search bound (x for primal, coefficient box for dual)");
  psi->add_option("--check", c.check, "Run a consistency check: duality or sses");
  psi->add_option("--tolerance", c.tolerance, "Duality tolerance");

  auto* estimate = app.add_subcommand("estimate", "Finite-scale exponent estimates");
  add_common(estimate, c);
  add_scan(estimate, c);
  estimate->add_option("--n", c.n, "Degree n")->required();
  estimate->add_option("--kind", c.kind, "lambda, lambda_hat, w, w_hat, w_star or all");
  estimate->add_option("--xmax", c.x_max, "Largest x for lambda estimates");
  estimate->add_option("--hmax", c.h_max, "Largest height for w estimates");

  auto* verify = app.add_subcommand("verify", "Evaluate the exponent relations on estimates");
  add_common(verify, c);
  add_scan(verify, c);
  verify->add_option("--n", c.n, "Degree n")->required();
  verify->add_option("--m", c.m, "Parameter m")->required();
  verify->add_option("--xmax", c.x_max, "Largest x for lambda estimates");
  verify->add_option("--hmax", c.h_max, "Largest height for w estimates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::map<CLI::App*, void (*)(const Config&, std::ostream&)> handlers{
      {bound, cmd_bound},     {constants, cmd_constants}, {table, cmd_table},   {minpoints, cmd_minpoints},
      {forms, cmd_forms},     {approximants, cmd_approximants}, {psi, cmd_psi}, {estimate, cmd_estimate},
      {verify, cmd_verify}};
  try {
    for (const auto& [sub, fn] : handlers) {
      if (sub->parsed()) {
        std::ostringstream buf;
        fn(c, buf);
        std::cout << buf.str() << std::flush;
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SearchExhausted& e) {
    std::cerr << "domain error: " << e.what() << "\nhint: raise --bound\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what()
              << "\nhint: raise --max-bits, request fewer --digits, or supply a longer decimal expansion\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
