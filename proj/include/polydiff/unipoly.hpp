#pragma once

#include <string>
#include <vector>

#include "polydiff/linalg.hpp"
#include "polydiff/scalar.hpp"

namespace polydiff {

/// Dense univariate polynomial over ExactScalar (variable "t").
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static UniPoly constant(ExactScalar v) { return UniPoly({std::move(v)}); }
  static UniPoly t() { return UniPoly({ExactScalar(0), ExactScalar(1)}); }
  /// 1 - t^k
  static UniPoly one_minus_tk(unsigned k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }
  const ExactScalar& operator[](std::size_t i) const;
  const std::vector<ExactScalar>& coeffs() const { return c_; }
  const ExactScalar& leading() const { return c_.back(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const ExactScalar& s) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
  UniPoly monic() const;

  ExactScalar eval(const ExactScalar& x) const;

  /// Truncated power series coefficients of 1/(*this); constant term must be
  /// invertible.
  std::vector<ExactScalar> inverse_series(std::size_t n_terms) const;

  std::string str() const;  // coefficients in variable t

 private:
  void trim();
  std::vector<ExactScalar> c_;  // c_[i] multiplies t^i; invariant: back() != 0
};

UniPoly uni_gcd(UniPoly a, UniPoly b);

/// Rational function num/den, normalized: gcd removed, den monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UniPoly::constant(ExactScalar(1))) {}
  RationalFunction(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  RationalFunction scaled(const ExactScalar& s) const;

  bool equals(const RationalFunction& o) const;  // cross-multiplied compare

  std::vector<ExactScalar> series(std::size_t n_terms) const;

 private:
  UniPoly num_, den_;
};

/// det(I - t*g) for a square exact matrix, via principal-minor sums
/// (elementary symmetric functions); dimension <= 4 in practice.
UniPoly char_factor(const ScalarMat& g);

/// Exact characteristic polynomial det(t*I - m) by Faddeev-LeVerrier.
UniPoly char_poly(const ScalarMat& m);

}  // namespace polydiff
