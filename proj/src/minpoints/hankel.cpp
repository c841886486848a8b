#include "forms.hpp"
#include "wirsing/errors.hpp"
#include "wirsing/minpoints.hpp"

namespace wirsing {

int matrix_rank(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t k = col + 1; k < cols; ++k) {
        Integer t = m[rank][col] * m[i][k] - m[i][col] * m[rank][k];
        mpz_divexact(m[i][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

IntMatrix hankel_matrix(const MinimalPoint& p, int h) {
  if (h < 0 || h > p.n) throw DomainError("Hankel order must lie in [0, n]");
  IntMatrix v(static_cast<std::size_t>(h) + 1);
  for (int r = 0; r <= h; ++r) {
    for (int c = 0; c <= p.n - h; ++c) v[static_cast<std::size_t>(r)].push_back(p.coords[static_cast<std::size_t>(r + c)]);
  }
  return v;
}

int hankel_defect(const MinimalPoint& p) {
  for (int h = 1; h <= p.n; ++h) {
    if (matrix_rank(hankel_matrix(p, h)) <= h) return h;
  }
  return p.n;
}

bool shifted_vectors_independent(const MinimalPoint& p, int m) {
  if (m < 1 || m > (p.n + 1) / 2) throw DomainError("m must satisfy 1 <= m <= ceil(n/2)");
  return matrix_rank(hankel_matrix(p, m)) == m + 1;
}

ShiftedSolutions shifted_solutions(const TargetNumber& xi, const MinimalPoint& p, int m) {
  ShiftedSolutions out;
  out.dependent = !shifted_vectors_independent(p, m);
  detail::FormEvaluator ev(xi, ScanOptions{}.max_bits);
  for (int k = 0; k <= m; ++k) {
    std::vector<Integer> v(p.coords.begin() + k, p.coords.begin() + k + (p.n - m) + 1);
    RealInterval worst;
    for (int j = 1; j <= p.n - m; ++j) {
      detail::Form t(static_cast<std::size_t>(j) + 1, Integer(0));
      t[0] = -v[static_cast<std::size_t>(j)];
      t[static_cast<std::size_t>(j)] = v[0];
      worst = max(worst, ev.abs_value(t));
    }
    out.vectors.push_back(std::move(v));
    out.errors.push_back(worst);
  }
  return out;
}

}  // namespace wirsing
