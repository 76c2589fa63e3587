#include "polydiff/polymatrix.hpp"

#include <cassert>

namespace polydiff {

void PolyMatrix::set(int i, int j, MultiPoly p) {
  entries_[i * dim_ + j] = p;
  if (symmetric_ && i != j) entries_[j * dim_ + i] = std::move(p);
}

namespace {

MultiPoly det_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
  const int k = (int)cols.size();
  if (k == 1) return m.at(row, cols[0]);
  MultiPoly acc;
  for (int c = 0; c < k; ++c) {
    const MultiPoly& pivot = m.at(row, cols[c]);
    if (pivot.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(k - 1);
    for (int j = 0; j < k; ++j) {
      if (j != c) rest.push_back(cols[j]);
    }
    MultiPoly minor = det_rec(m, rest, row + 1);
    MultiPoly contrib = pivot * minor;
    if (c % 2 == 0) {
      acc += contrib;
    } else {
      acc -= contrib;
    }
  }
  return acc;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  assert(m.dim() >= 1 && m.dim() <= 4);
  std::vector<int> cols(m.dim());
  for (int i = 0; i < m.dim(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

}  // namespace polydiff
