#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydiff/linalg.hpp"
#include "polydiff/multipoly.hpp"
#include "polydiff/unipoly.hpp"

namespace polydiff {

/// Exact orthogonal matrix (dimension 3 or 4). Construction verifies
/// M^T M = Id exactly and det = +-1.
class OrthogonalElement {
 public:
  OrthogonalElement(int dim, ScalarMat m);

  int dim() const { return dim_; }
  const ExactScalar& at(int i, int j) const { return m_[i][j]; }
  const ScalarMat& matrix() const { return m_; }

  OrthogonalElement operator*(const OrthogonalElement& o) const;
  OrthogonalElement transpose() const;  // == inverse
  ExactScalar det() const;
  ExactScalar trace() const;

  bool operator==(const OrthogonalElement& o) const { return m_ == o.m_; }
  bool operator<(const OrthogonalElement& o) const;

  static OrthogonalElement identity(int dim);
  static OrthogonalElement central_symmetry(int dim);  // x -> -x

  /// Rotation about axis v by the angle whose cosine is `cos_phi`;
  /// `sin_over_norm` = sin(phi)/|v| must be exact in the scalar field.
  static OrthogonalElement rotation_about(const ScalarVec& v,
                                          const ExactScalar& cos_phi,
                                          const ExactScalar& sin_over_norm);

  std::string str() const;  // row-major entries, canonical scalar text

 private:
  int dim_;
  ScalarMat m_;
};

/// Closed finite set of exact orthogonal matrices with a canonical
/// (deterministic) element order.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, int dim, std::vector<OrthogonalElement> elements);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<OrthogonalElement>& elements() const { return elements_; }

  bool contains(const OrthogonalElement& g) const;

  /// Closure, inverses and identity, verified exactly.
  bool verify_group_axioms() const;

  std::string dump() const;  // one matrix per line

 private:
  std::string name_;
  int dim_;
  std::vector<OrthogonalElement> elements_;  // sorted canonically
};

/// Closure of the generator set under products. Throws
/// ClosureCapExceededError beyond `cap` elements.
FiniteGroup generate_group(const std::vector<OrthogonalElement>& generators,
                           const std::string& name = "", std::size_t cap = 10000);

/// Named constructions: C/D families ("C", "D", "CJ", "DJ", "CnDn", "CnC2n",
/// "DnD2n" with n in {1,2,3,4,5,6,10} as exactness permits), polyhedral
/// groups ("T", "O", "I", "TJ", "OJ", "IJ", "TO"), and "cornulier" (n = p).
/// Labels may carry the order inline ("C5", "C5D5", "D3D6").
FiniteGroup construct_named(const std::string& label,
                            std::optional<int> n = std::nullopt);

struct InvarianceVerdict {
  bool invariant = true;
  std::optional<OrthogonalElement> violator;
};

/// True iff p(g^T x) == p(x) exactly for every element.
InvarianceVerdict is_invariant(const MultiPoly& p, const FiniteGroup& g);
/// Serial reference implementation (kept for testing the parallel kernel).
InvarianceVerdict is_invariant_serial(const MultiPoly& p, const FiniteGroup& g);

MultiPoly group_action(const MultiPoly& p, const OrthogonalElement& g,
                       const std::vector<VarId>& ambient);

struct MolienSeries {
  UniPoly numerator;    // rational coefficients
  UniPoly denominator;  // monic, rational coefficients
  std::vector<long> coefficients;  // d_0 .. d_N
};

/// F(G,t) = (1/|G|) sum_g 1/det(Id - t g), exact; IrrationalSeriesError if
/// the radical part fails to cancel.
MolienSeries molien(const FiniteGroup& g, std::size_t truncation);

/// Rank of the group-averaging operator on homogeneous degree-n polynomials:
/// the brute-force oracle for Molien coefficients.
int reynolds_dimension(const FiniteGroup& g, int degree);
int reynolds_dimension_serial(const FiniteGroup& g, int degree);

MultiPoly reynolds_average(const MultiPoly& p, const FiniteGroup& g);

/// Exact invariance test for the symmetry groups of the vertical axis,
/// independent of matrix representations: works for every n. The polynomial
/// is expanded in complex monomials Z^a Zbar^b z^k and the generator
/// conditions are checked on exponents.
enum class AxialFamily { Cn, Dn, CnJ, DnJ, CnC2n, CnDn, DnD2n };
bool axial_invariant(const MultiPoly& p, AxialFamily family, int n);

std::vector<VarId> ambient_vars(int dim);

}  // namespace polydiff
