#include "polydiff/linalg.hpp"

#include <cassert>

namespace polydiff {

LinearSolveResult linear_solve(const ScalarMat& a, const ScalarVec& rhs) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  assert(rhs.size() == m);

  // Augment with rhs and an identity block tracking row operations, so an
  // inconsistent row yields a certificate combination of the original rows.
  ScalarMat w(m, ScalarVec(n + 1 + m, ExactScalar(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
    w[i][n] = rhs[i];
    w[i][n + 1 + i] = ExactScalar(1);
  }

  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && w[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(w[piv], w[row]);
    const ExactScalar inv = w[row][col].inverse();
    for (std::size_t j = 0; j < n + 1 + m; ++j) w[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || w[i][col].is_zero()) continue;
      const ExactScalar f = w[i][col];
      for (std::size_t j = 0; j < n + 1 + m; ++j) w[i][j] -= f * w[row][j];
    }
    pivot_col_of_row.push_back((int)col);
    pivot_row_of_col[col] = (int)row;
    ++row;
  }

  LinearSolveResult out;
  out.rank = (int)row;

  for (std::size_t i = row; i < m; ++i) {
    if (!w[i][n].is_zero()) {
      out.consistent = false;
      out.certificate.assign(m, ExactScalar(0));
      for (std::size_t j = 0; j < m; ++j) out.certificate[j] = w[i][n + 1 + j];
      return out;
    }
  }

  out.consistent = true;
  out.solution.assign(n, ExactScalar(0));
  for (std::size_t r = 0; r < row; ++r) {
    out.solution[pivot_col_of_row[r]] = w[r][n];
  }
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    ScalarVec basis(n, ExactScalar(0));
    basis[col] = ExactScalar(1);
    for (std::size_t r = 0; r < row; ++r) {
      basis[pivot_col_of_row[r]] = -w[r][col];
    }
    out.nullspace.push_back(std::move(basis));
  }
  return out;
}

int matrix_rank(const ScalarMat& a) {
  if (a.empty()) return 0;
  ScalarMat w = a;
  const std::size_t m = w.size(), n = w[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && w[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(w[piv], w[row]);
    const ExactScalar inv = w[row][col].inverse();
    for (std::size_t j = col; j < n; ++j) w[row][j] *= inv;
    for (std::size_t i = row + 1; i < m; ++i) {
      if (w[i][col].is_zero()) continue;
      const ExactScalar f = w[i][col];
      for (std::size_t j = col; j < n; ++j) w[i][j] -= f * w[row][j];
    }
    ++row;
  }
  return (int)row;
}

ExactScalar scalar_matrix_det(const ScalarMat& a) {
  const std::size_t n = a.size();
  ScalarMat w = a;
  ExactScalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w[piv][col].is_zero()) ++piv;
    if (piv == n) return ExactScalar(0);
    if (piv != col) {
      std::swap(w[piv], w[col]);
      det = -det;
    }
    det *= w[col][col];
    const ExactScalar inv = w[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (w[i][col].is_zero()) continue;
      const ExactScalar f = w[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) w[i][j] -= f * w[col][j];
    }
  }
  return det;
}

}  // namespace polydiff
