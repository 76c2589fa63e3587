#include "polydiff/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace polydiff {

namespace {

bool squarefree(unsigned d) {
  if (d == 0) return false;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

ExactScalar::ExactScalar(long num, long den) : a_(num, den), b_(0), d_(1) {
  if (den == 0) throw ZeroDivisorError();
  canon_rat(a_);
}

ExactScalar::ExactScalar(Rational a, Rational b, unsigned radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  canon_rat(a_);
  canon_rat(b_);
  if (!squarefree(d_)) throw BadRadicandError(d_);
  normalize();
}

ExactScalar ExactScalar::golden() {
  return ExactScalar(Rational(1, 2), Rational(1, 2), 5);
}

void ExactScalar::normalize() {
  if (d_ == 1) {
    // sqrt(1) = 1: fold the b component into the rational part.
    if (sgn(b_) != 0) {
      a_ += b_;
      b_ = 0;
    }
  } else if (sgn(b_) == 0) {
    d_ = 1;
  }
}

void ExactScalar::check_same_field(const ExactScalar& o) const {
  if (d_ != 1 && o.d_ != 1 && d_ != o.d_) throw MixedRadicandError(d_, o.d_);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  if (d_ == 1) d_ = o.d_;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (d_ == 1) d_ = o.d_;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  check_same_field(o);
  const unsigned d = d_ == 1 ? o.d_ : d_;
  Rational a = a_ * o.a_;
  if (sgn(b_) != 0 && sgn(o.b_) != 0) a += b_ * o.b_ * (long)d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw ZeroDivisorError();
  if (d_ == 1) return ExactScalar(Rational(1) / a_);
  // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d); the norm is nonzero
  // because d is squarefree.
  Rational norm = a_ * a_ - b_ * b_ * (long)d_;
  return ExactScalar(a_ / norm, -b_ / norm, d_);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  return *this *= o.inverse();
}

int ExactScalar::compare_repr(const ExactScalar& x, const ExactScalar& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_ ? -1 : 1;
  int c = cmp(x.a_, y.a_);
  if (c != 0) return c;
  return cmp(x.b_, y.b_);
}

int ExactScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  int c = cmp(a_ * a_, b_ * b_ * (long)d_);
  if (c == 0) return 0;  // unreachable for squarefree d, kept for safety
  return c > 0 ? sa : sb;
}

double ExactScalar::to_double() const {
  double v = a_.get_d();
  if (sgn(b_) != 0) v += b_.get_d() * std::sqrt((double)d_);
  return v;
}

std::string ExactScalar::str() const {
  if (d_ == 1) return a_.get_str();
  std::ostringstream os;
  const std::string rad = "r" + std::to_string(d_);
  if (sgn(a_) != 0) {
    os << a_.get_str();
    if (sgn(b_) > 0) os << "+";
  }
  if (b_ == 1) {
    os << rad;
  } else if (b_ == -1) {
    os << "-" << rad;
  } else {
    os << b_.get_str() << rad;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
  return os << s.str();
}

}  // namespace polydiff
