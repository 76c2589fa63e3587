#pragma once

#include <vector>

#include "polydiff/multipoly.hpp"

namespace polydiff {

/// Square matrix of polynomials; co-metrics are stored with the symmetric
/// flag set, in which case entry (i,j) always equals entry (j,i).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int dim, bool symmetric = false)
      : dim_(dim), symmetric_(symmetric),
        entries_(dim * dim, MultiPoly{}) {}

  int dim() const { return dim_; }
  bool symmetric() const { return symmetric_; }

  const MultiPoly& at(int i, int j) const { return entries_[i * dim_ + j]; }
  void set(int i, int j, MultiPoly p);

  bool operator==(const PolyMatrix& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

 private:
  int dim_ = 0;
  bool symmetric_ = false;
  std::vector<MultiPoly> entries_;
};

/// Exact determinant by cofactor expansion; dimension <= 4.
MultiPoly determinant(const PolyMatrix& m);

}  // namespace polydiff
