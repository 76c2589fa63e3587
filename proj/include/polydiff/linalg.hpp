#pragma once

#include <vector>

#include "polydiff/scalar.hpp"

namespace polydiff {

using ScalarVec = std::vector<ExactScalar>;
using ScalarMat = std::vector<ScalarVec>;  // row-major

struct LinearSolveResult {
  bool consistent = false;
  ScalarVec solution;               // one solution, free variables set to 0
  std::vector<ScalarVec> nullspace; // basis of the homogeneous solutions
  ScalarVec certificate;            // row combination proving inconsistency:
                                    // certificate^T * A == 0, certificate^T * rhs != 0
  int rank = 0;
};

/// Exact Gaussian elimination over the scalar field.
LinearSolveResult linear_solve(const ScalarMat& a, const ScalarVec& rhs);

int matrix_rank(const ScalarMat& a);

ExactScalar scalar_matrix_det(const ScalarMat& a);

}  // namespace polydiff
