#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wirsing/interval.hpp"
#include "wirsing/polynomial.hpp"
#include "wirsing/roots.hpp"
#include "wirsing/target.hpp"

namespace wirsing {

/// Best-approximation vector (x, y_1, ..., y_n) with y_j the nearest integer to x xi^j
/// and error L = max_j |x xi^j - y_j|.
struct MinimalPoint {
  std::vector<Integer> coords;
  int n = 0;
  RealInterval error;
  /// Another x produced exactly the same error; the earlier x is kept.
  bool tie = false;

  const Integer& x() const { return coords.front(); }
};

/// Integer polynomial a_0 + a_1 xi + ... + a_n xi^n with a_0 chosen to minimize its value.
struct LinearFormRecord {
  std::vector<Integer> coeffs;
  /// max_{1 <= j <= n} |a_j|
  Integer height;
  /// |a_0 + a_1 xi + ... + a_n xi^n|
  RealInterval value;
  /// The form vanishes at xi exactly (xi algebraic of degree <= n).
  bool exact_zero = false;
  bool tie = false;
};

/// Real algebraic number of degree <= n close to xi.
struct AlgebraicApproximant {
  AlgebraicReal alpha;
  /// Naive height of the primitive minimal polynomial of alpha.
  Integer height;
  /// |xi - alpha|
  RealInterval distance;
  /// alpha equals xi.
  bool exact_hit = false;
  /// Minimal polynomial of degree >= 4 whose irreducibility was not proven.
  bool irreducibility_uncertified = false;
  bool tie = false;

  int degree() const { return alpha.polynomial().degree(); }
};

struct ScanOptions {
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 1;
  /// Precision cap for certified comparisons.
  long max_bits = 1L << 13;
};

// ---------------------------------------------------------------------------
// Minimal points

/// Record points for x = 1 .. x_max, certified against the exact target.
std::vector<MinimalPoint> best_approx_sequence(const TargetNumber& xi, int n, const Integer& x_max,
                                               const ScanOptions& opt = {});

/// "x y_1 ... y_n [lo, hi]" with the error in scientific notation.
std::string to_line(const MinimalPoint& p, int significant = 6);
/// Inverse of to_line for the integer part; the error interval is parsed as written.
MinimalPoint parse_minimal_point(const std::string& line);

// ---------------------------------------------------------------------------
// Hankel structure of a point

using IntMatrix = std::vector<std::vector<Integer>>;

/// Exact rank over the rationals (fraction-free elimination).
int matrix_rank(IntMatrix m);

/// (h+1) x (n-h+1) matrix with entry (r, c) = x_{r+c}.
IntMatrix hankel_matrix(const MinimalPoint& p, int h);
/// Smallest h with rank V(h) <= h.
int hankel_defect(const MinimalPoint& p);
/// The m+1 shifted segments (x_k, ..., x_{k+n-m}), k = 0..m, are linearly independent.
bool shifted_vectors_independent(const MinimalPoint& p, int m);

struct ShiftedSolutions {
  std::vector<std::vector<Integer>> vectors;
  /// max_{1 <= j <= n-m} |v_0 xi^j - v_j| for each vector.
  std::vector<RealInterval> errors;
  bool dependent = false;
};
ShiftedSolutions shifted_solutions(const TargetNumber& xi, const MinimalPoint& p, int m);

/// A point with the given coordinates (n = size - 1) and no error attached.
MinimalPoint make_point(const std::vector<long>& coords);

// ---------------------------------------------------------------------------
// Linear forms and algebraic approximants

/// Shell-by-shell minima of |P(xi)| over integer polynomials of height H = 1 .. h_max,
/// keeping the strictly improving ones.
std::vector<LinearFormRecord> best_linear_form_sequence(const TargetNumber& xi, int n, long h_max,
                                                        const ScanOptions& opt = {});

struct ApproximantOptions {
  ScanOptions scan;
  /// n = 2 uses full enumeration while h_max is at most this.
  long exhaustive_height = 40;
  /// Candidate polynomials are perturbed by +-1 in each coefficient.
  bool perturb = true;
};

std::vector<AlgebraicApproximant> algebraic_approximant_sequence(const TargetNumber& xi, int n, long h_max,
                                                                 const ApproximantOptions& opt = {});

/// Irreducible factor of p (integer, primitive, positive leading coefficient) that vanishes
/// at the given root. Sets *certified = false when a degree >= 4 factor could not be proven
/// irreducible.
IntPolynomial minimal_polynomial_of_root(const IntPolynomial& p, const AlgebraicReal& root, bool* certified = nullptr);

/// Integer tie-breaking rule for nearest integers: round half to even.
Integer nearest_integer(const Rational& q);

}  // namespace wirsing
