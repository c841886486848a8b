#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wirsing/interval.hpp"
#include "wirsing/target.hpp"

namespace wirsing {

enum class PsiSide { PRIMAL, DUAL };
std::string to_string(PsiSide s);

/// Attained value of the l-th successive minimum exponent at parameter Q.
///
/// Primal: the least mu such that l linearly independent (x, y_1, ..., y_N) satisfy
/// 1 <= x <= Q^(1+mu) and max_i |x xi^i - y_i| <= Q^(-1/N+mu).
/// Dual: the same for (x_0, ..., x_N) with max |x_i| <= Q^(1/N+mu) and
/// |x_0 + x_1 xi + ... + x_N xi^N| <= Q^(-1+mu).
struct PsiSample {
  Rational Q;
  int N = 1;
  int l = 1;
  RealInterval value;
  PsiSide side = PsiSide::PRIMAL;
  /// The search bound may have excluded a vector that would lower the value.
  bool truncated = false;
  /// The l vectors that realize the value, in the order they were accepted.
  std::vector<std::vector<Integer>> witnesses;
};

/// search_bound caps x (primal). Throws SearchExhausted when fewer than l independent
/// vectors are found.
PsiSample psi_empirical(const TargetNumber& xi, int N, int l, const Rational& Q, long search_bound);
/// search_bound caps max(|x_1|, ..., |x_N|) (dual).
PsiSample psi_star_empirical(const TargetNumber& xi, int N, int l, const Rational& Q, long search_bound);

/// Values for l = 1 .. N+1 at once; each equals the corresponding single-l call.
std::vector<PsiSample> psi_all(const TargetNumber& xi, int N, const Rational& Q, long search_bound, PsiSide side);

enum class ExponentKind { LAMBDA, LAMBDA_HAT, W, W_HAT };
std::string to_string(ExponentKind k);

/// Exponent from a psi limit:
///   (1 + lambda)(1 + psi) = (N + 1) / N     for LAMBDA (lower limit) and LAMBDA_HAT (upper limit),
///   (1 + w)(psi* + 1 / N) = (N + 1) / N     for W and W_HAT on the dual side.
/// Throws DomainError when a factor is not positive.
RealInterval lambda_from_psi(const RealInterval& psi, int N, ExponentKind kind);
/// Inverse of lambda_from_psi. For l = 1 the exponent must be at least the Dirichlet
/// value (1/N for LAMBDA*, N for W*).
RealInterval psi_from_lambda(const RealInterval& exponent, int N, ExponentKind kind, int l = 1);

struct CheckRow {
  std::string name;
  int l = 0;
  std::optional<Rational> Q;
  /// Quantity whose sign decides the check; it passes unless certainly negative.
  RealInterval margin;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  bool all_pass = true;
};

/// Pairs dual l with primal N+2-l at equal Q and N; margin = tol - |psi* + psi|.
/// Throws InputError when a sample has no partner.
CheckReport check_duality(const std::vector<PsiSample>& samples, const Rational& tolerance);

/// Grid surrogates of l psi_upper_l + (N+1-l) psi_lower_{N+1} >= 0, the mirrored form, and
/// psi_lower_{l+1} <= psi_upper_l, with max/min over the Q-grid standing in for the limits.
/// Requires primal samples for l = N+1 and for every other l present on the same Q-grid.
CheckReport check_sses(const std::vector<PsiSample>& samples);

/// Tab-separated rows: Q, N, l, side, lo, hi, truncated (with header when requested).
std::string samples_to_tsv(const std::vector<PsiSample>& samples, bool header = true, int digits = 12);

}  // namespace wirsing
