#pragma once

#include <string>
#include <vector>

#include "polydiff/multipoly.hpp"

namespace polydiff {

/// Canonical representative of an ambient polynomial modulo the sphere ideal
/// (sum of squares minus one). In reduced form the eliminated (last) ambient
/// variable appears with degree <= 1.
struct SpherePoly {
  MultiPoly value;
  bool reduced = true;
};

/// Rewrites every occurrence of v^2 by `replacement` until the v-degree is
/// <= 1. Shared by sphere reduction and by syzygy normal forms (eta^2 -> Q).
MultiPoly reduce_square(const MultiPoly& p, VarId v, const MultiPoly& replacement);

/// Calculus of the round sphere S^{d-1}: carré du champ and Laplacian acting
/// on polynomials in the ambient coordinates, with everything reduced modulo
/// the sphere ideal. The eliminated variable is the last ambient coordinate.
class SphereContext {
 public:
  explicit SphereContext(std::vector<std::string> ambient_names);
  static SphereContext dim2();  // (x, y), circle
  static SphereContext dim3();  // (x, y, z)
  static SphereContext dim4();  // (x1, y1, x2, y2), used by the 4-d family

  int dim() const { return (int)ambient_.size(); }
  const std::vector<VarId>& ambient() const { return ambient_; }

  SpherePoly reduce(const MultiPoly& p) const;
  bool is_reduced(const MultiPoly& p) const;

  /// Gamma(p, q) = sum_i d_i p d_i q - (sum_i x_i d_i p)(sum_j x_j d_j q),
  /// sphere-reduced. Symmetric and bilinear.
  SpherePoly gamma(const MultiPoly& p, const MultiPoly& q) const;

  /// Spherical Laplacian: per homogeneous component p_k,
  /// L(p_k) = Delta(p_k) - k (k + d - 2) p_k, sphere-reduced.
  SpherePoly laplacian(const MultiPoly& p) const;

  MultiPoly ambient_laplacian(const MultiPoly& p) const;

  struct AxiomVerdict {
    bool pass = true;
    MultiPoly residual_l;      // L(Phi(f)) - chain rule expansion
    MultiPoly residual_gamma;  // Gamma(Phi(f), g) - chain rule expansion
  };

  /// Verifies the second-order change of variable formulas for Phi applied
  /// to f = (f_1, ..., f_k); Phi is a polynomial in the formal variables
  /// u1..uk and g is an arbitrary ambient test polynomial.
  AxiomVerdict check_diffusion_axioms(const std::vector<MultiPoly>& f,
                                      const MultiPoly& phi,
                                      const MultiPoly& g) const;

 private:
  std::vector<VarId> ambient_;
  MultiPoly last_sq_replacement_;  // 1 - sum of other squares
};

}  // namespace polydiff
