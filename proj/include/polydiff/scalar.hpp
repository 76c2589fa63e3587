#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "polydiff/errors.hpp"

namespace polydiff {

using Rational = mpq_class;

/// Element of the real quadratic field Q(sqrt(d)), stored as a + b*sqrt(d)
/// with a, b rational. Values are kept canonical: rational parts in lowest
/// terms with positive denominator, and b == 0 forces d == 1, so equal
/// values always have identical representation. Values from distinct
/// irrational fields never combine (MixedRadicandError).
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), d_(1) {}
  ExactScalar(int n) : a_(n), b_(0), d_(1) {}           // NOLINT(runtime/explicit)
  ExactScalar(long n) : a_(n), b_(0), d_(1) {}          // NOLINT(runtime/explicit)
  ExactScalar(const Rational& a) : a_(a), b_(0), d_(1) { canon_rat(a_); }  // NOLINT
  ExactScalar(long num, long den);
  ExactScalar(Rational a, Rational b, unsigned radicand);

  static ExactScalar root(unsigned d) { return ExactScalar(0, 1, d); }
  static ExactScalar sqrt5() { return root(5); }
  /// (1 + sqrt 5)/2, the golden ratio.
  static ExactScalar golden();

  const Rational& rat() const { return a_; }
  const Rational& rad_coeff() const { return b_; }
  unsigned radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return d_ == 1; }
  bool is_one() const { return d_ == 1 && a_ == 1; }

  ExactScalar operator-() const { return ExactScalar(-a_, -b_, d_); }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  ExactScalar inverse() const;
  /// Galois conjugate a - b*sqrt(d).
  ExactScalar conjugate() const { return ExactScalar(a_, -b_, d_); }

  bool operator==(const ExactScalar& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  /// Deterministic total order on representations (radicand, a, b);
  /// used for canonical sorting, not a numeric order.
  static int compare_repr(const ExactScalar& x, const ExactScalar& y);

  /// Exact sign of the real value a + b*sqrt(d).
  int sign() const;

  double to_double() const;

  /// Canonical text: "3/2", "-1+2r5", "r5", "1/2-1/2r5".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

 private:
  ExactScalar(Rational a, Rational b, unsigned d, bool /*already_canonical*/)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  static void canon_rat(Rational& q) { q.canonicalize(); }
  void normalize();
  void check_same_field(const ExactScalar& o) const;

  Rational a_;
  Rational b_;
  unsigned d_;
};

}  // namespace polydiff
