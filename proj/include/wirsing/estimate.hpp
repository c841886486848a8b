#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wirsing/bounds.hpp"
#include "wirsing/interval.hpp"
#include "wirsing/minpoints.hpp"

namespace wirsing {

enum class EstimateKind { LAMBDA, LAMBDA_HAT, W, W_HAT, W_STAR };
std::string to_string(EstimateKind k);

enum class EstimateStatus { FINITE, INFINITE, NOT_APPLICABLE };
std::string to_string(EstimateStatus s);

/// Finite-scale reading of an exponent from a record sequence.
struct ExponentEstimate {
  EstimateKind kind = EstimateKind::LAMBDA;
  int n = 1;
  RealInterval value;
  EstimateStatus status = EstimateStatus::FINITE;
  /// Record indices [first, last] the value is taken over.
  std::pair<std::size_t, std::size_t> window{0, 0};
  /// Spread (max - min) of the per-record ratios inside the window.
  double stability = 0;
  /// Running extremum after each record of the window.
  std::vector<RealInterval> running;
  /// Least-squares slope of -log(error) against log(scale) over the window (ordinary kinds).
  std::optional<double> slope;
  std::string note;
};

struct EstimatorOptions {
  /// Uniform estimates ignore this many leading records.
  std::size_t burn_in = 3;
  /// Ordinary estimates use the trailing fraction of the records, at least min_window of them.
  double trailing_fraction = 0.25;
  std::size_t min_window = 3;
  long log_bits = 64;
};

/// Running max of -log L(x_i) / log x_i over the trailing window.
ExponentEstimate estimate_lambda(const std::vector<MinimalPoint>& seq, const EstimatorOptions& opt = {});
/// Running min of -log L(x_i) / log x_{i+1} past the burn-in.
ExponentEstimate estimate_lambda_hat(const std::vector<MinimalPoint>& seq, const EstimatorOptions& opt = {});
ExponentEstimate estimate_w(const std::vector<LinearFormRecord>& seq, const EstimatorOptions& opt = {});
ExponentEstimate estimate_w_hat(const std::vector<LinearFormRecord>& seq, const EstimatorOptions& opt = {});
/// Running max of -log|xi - alpha| / log H(alpha) - 1 over the trailing window. n labels the
/// degree bound of the search; 0 takes the largest degree present.
ExponentEstimate estimate_w_star(const std::vector<AlgebraicApproximant>& seq, int n = 0,
                                 const EstimatorOptions& opt = {});

/// log(a) / log(b) for positive a and b != 1. Exact when both are points and powers of a
/// common rational base.
RealInterval log_ratio(const RealInterval& a, const RealInterval& b, long bits = 64);

enum class RelationVerdict { HOLDS, VIOLATED_AT_FINITE_SCALE, NOT_APPLICABLE };
std::string to_string(RelationVerdict v);

/// lhs >= rhs is the relation; slack = lhs - rhs.
struct RelationReport {
  FormulaId relation_id = FormulaId::H11;
  RealInterval lhs;
  RealInterval rhs;
  RealInterval slack;
  RelationVerdict verdict = RelationVerdict::NOT_APPLICABLE;
  /// Human-readable statement, or the reason the relation was skipped.
  std::string note;
};

/// Evaluates every implemented relation between exponents of a transcendental number on the
/// estimates. Needs LAMBDA_n, LAMBDA_HAT_n, W_n, W_HAT_n, W_STAR_n, W_{n-m}, W_HAT_{n-m} and
/// W_{m+1}; throws InputError naming the first one missing. Algebraic targets, unmet hypotheses
/// and non-finite estimates give NOT_APPLICABLE.
std::vector<RelationReport> verify_relations(const std::vector<ExponentEstimate>& estimates, long n, long m,
                                             bool target_algebraic = false);

/// JSON array of {relation_id, lhs, rhs, slack, verdict, note}.
std::string relations_to_json(const std::vector<RelationReport>& reports, int digits = 12);
std::string estimate_to_json(const ExponentEstimate& e, int digits = 12);

}  // namespace wirsing
