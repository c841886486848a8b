#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wirsing/interval.hpp"
#include "wirsing/rational.hpp"
#include "wirsing/roots.hpp"

namespace wirsing {

enum class FormulaId {
  PHI,
  EQUILIBRIUM,
  F,
  G,
  R,
  S,
  C_GAMMA,
  H11,
  H21,
  VERYNEW,
  WINDAG,
  TOLL,
  DAVSCHM,
  TOLLER_1,
  TOLLER_2,
  TOLLER_3,
  STRONG_TOLL,
  EVEN_N_LOWER,
  EVEN_N_UPPER,
  CONSISTENCY_MAX,
  GAMMA0,
  DELTA,
  ALPHA0,
  INV_SQRT3,
};

std::string to_string(FormulaId id);
FormulaId formula_id_from_string(const std::string& name);

/// 10^-30, the default enclosure width for constants and bounds.
Rational default_width();

/// An evaluated bound: exact enclosure plus a display string whose digits are certified.
struct BoundReport {
  FormulaId formula_id = FormulaId::PHI;
  std::map<std::string, Rational> params;
  RealInterval value;
  /// Truncated decimal; every printed digit is shared by both endpoints.
  std::string display;
  int display_digits = 0;
  /// e.g. "limit" when S(2) is returned as its limiting value.
  std::vector<std::string> flags;
};

struct OptimizationResult {
  long n = 0;
  long best_m = 0;
  RealInterval bound;
  std::vector<std::pair<long, RealInterval>> all_candidates;
};

struct TableRow {
  long n = 0;
  std::optional<std::string> tsi_reference;
  std::string bs_value;
};

struct PositivityCheck {
  long n = 0;
  long m = 0;
  bool clamped = false;
  RealInterval expression;
  bool positive = false;
  /// Phi(m, n) / n > 1/sqrt(3), certified.
  bool exceeds_inv_sqrt3 = false;
};

/// Largest m with m < (n - 1) / 2.
long max_admissible_m(long n);

// The lower bound Phi(m, n) for Wirsing's exponent and its optimizer over m.
RealInterval phi_value(long m, long n, const Rational& width = default_width());
BoundReport phi_bound(long m, long n, int digits = 2);
AlgebraicReal phi_algebraic(long m, long n);
AlgebraicReal equilibrium_lambda(long m, long n);
OptimizationResult best_m(long n, const Rational& width = default_width());
std::vector<TableRow> bs_table(const std::vector<long>& ns);
/// Static reference column for the comparison table, keyed by n.
const std::map<long, std::string>& tsi_reference_table();

RealInterval eval_F(const RealInterval& t, const Rational& width = default_width());
std::pair<AlgebraicReal, RealInterval> argmax_F(const Rational& width = default_width());
RealInterval eval_G(const RealInterval& t, const Rational& width = default_width());
RealInterval eval_c(const RealInterval& gamma, const Rational& width = default_width());
/// Unique root of 4t^4 - 12t^3 + 10t^2 - 6t + 1 in (0, 1/2).
AlgebraicReal gamma0();
RealInterval delta(const Rational& width = default_width());
/// (3 - sqrt 3) / 6 as the root of 6t^2 - 6t + 1 in (0, 1/2).
AlgebraicReal alpha0();
RealInterval inv_sqrt3(const Rational& width = default_width());

RealInterval eval_R(const RealInterval& lam, const Rational& width = default_width());
/// S on [1, 2]; S(2) is the 0/0 limit 2 and sets *at_limit.
RealInterval eval_S(const RealInterval& lam, const Rational& width = default_width(), bool* at_limit = nullptr);

// Right-hand sides of the exponent relations for 1 <= m < (n-1)/2.
RealInterval rhs_h11(long n, long m, const RealInterval& lam_hat);
RealInterval rhs_h21(long n, long m, const RealInterval& lam_hat, const RealInterval& lam);
RealInterval rhs_verynew(long n, long m, const RealInterval& lam_hat);
RealInterval rhs_windag(long n, long m, const RealInterval& lam_hat);
/// Largest lambda-hat compatible with the lower and upper bounds for w_{n-m}.
AlgebraicReal consistency_max_lambda(long n, long m);

// Even n with m = n/2 - 1.
RealInterval even_n_lower(long n, const RealInterval& lam_hat, const RealInterval& lam);
RealInterval even_n_upper(long n, const RealInterval& lam_hat);

/// Arguments of the transfer inequalities; only the ones a formula uses must be set.
struct TransferArgs {
  long n = 1;
  std::optional<RealInterval> w;
  std::optional<RealInterval> w_hat;
  std::optional<RealInterval> lam_hat;
};

/// Lower bound for w*_n given by TOLL, DAVSCHM, TOLLER_1..3 or STRONG_TOLL.
RealInterval transfer_rhs(FormulaId kind, const TransferArgs& args);

/// -((3-sqrt3)/sqrt6 n - sqrt6 m)^2 + (9-2sqrt3) n - 12m; positivity gives Phi(m, n) / n > 1/sqrt3.
RealInterval positivity_expression(long n, long m, const Rational& width = default_width());
/// Floor of n * alpha0, certified.
long floor_n_alpha0(long n);
PositivityCheck verify_inv_sqrt3_bound(long n);

/// Builds a report whose display has `digits` certified truncated decimals, refining
/// `eval(width)` as needed.
BoundReport make_report(FormulaId id, std::map<std::string, Rational> params, int digits,
                        const std::function<RealInterval(const Rational& width)>& eval);

/// JSON object with schema_version, formula_id, params, lo, hi, display and flags.
std::string report_to_json(const BoundReport& r, int endpoint_digits = 40);

}  // namespace wirsing
