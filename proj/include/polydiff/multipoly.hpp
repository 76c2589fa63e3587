#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polydiff/scalar.hpp"

namespace polydiff {

using VarId = int;

/// Global variable registry. Names are interned once and keep a fixed index;
/// the index order is the canonical variable order used by graded-lex
/// comparisons and by sphere reduction (which eliminates the *last* ambient
/// variable). Standard names are pre-registered so canonical forms do not
/// depend on program flow.
class VarTable {
 public:
  static VarTable& instance();
  VarId intern(const std::string& name);
  std::optional<VarId> lookup(const std::string& name) const;
  const std::string& name(VarId id) const;
  std::size_t size() const { return names_.size(); }

 private:
  VarTable();
  std::vector<std::string> names_;
  std::map<std::string, VarId> index_;
};

VarId var(const std::string& name);

using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order: higher total degree first, ties broken
/// lexicographically with earlier variables dominating.
struct GrlexLess {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

/// Sparse multivariate polynomial over ExactScalar with named variables.
/// Canonical form: the variable list is the sorted minimal set of variables
/// actually present, no stored coefficient is zero, and terms are keyed by
/// exponent vectors under graded-lex. Two polynomials are equal iff their
/// canonical forms are identical.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, ExactScalar, GrlexLess>;

  MultiPoly() = default;
  static MultiPoly constant(ExactScalar c);
  static MultiPoly one() { return constant(ExactScalar(1)); }
  static MultiPoly variable(VarId v);
  static MultiPoly variable(const std::string& name) { return variable(var(name)); }
  /// Single term c * prod(vars[i]^exps[i]).
  static MultiPoly term(ExactScalar c, const std::vector<VarId>& vars,
                        const Exponents& exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  ExactScalar constant_value() const;  // 0 if zero polynomial

  const std::vector<VarId>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(VarId v) const;
  /// Weighted degree under per-variable positive weights; variables not in
  /// the map get weight 1.
  long weighted_degree(const std::map<VarId, long>& weights) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const ExactScalar& c) const;
  MultiPoly pow(unsigned k) const;

  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(VarId v) const;

  /// Exact composition: every bound variable is replaced by its image;
  /// unbound variables stay.
  MultiPoly substitute(const std::map<VarId, MultiPoly>& bindings) const;

  /// Coefficient of v^k, a polynomial in the remaining variables.
  MultiPoly coefficient_of(VarId v, unsigned k) const;

  double eval(const std::map<VarId, double>& point) const;
  ExactScalar eval_exact(const std::map<VarId, ExactScalar>& point) const;

  /// Leading term under graded-lex (largest). Polynomial must be nonzero.
  std::pair<Exponents, ExactScalar> leading_term() const;

  /// Canonical text form, terms in descending graded-lex:
  ///   "3 * x^2 y + (1/2+1/2r5) * z + -1".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  void insert_term(const Exponents& e, const ExactScalar& c);
  void trim();  // drop unused variables, re-canonicalize

  std::vector<VarId> vars_;  // ascending VarId, minimal
  TermMap terms_;
};

struct DivisionResult {
  bool divisible = false;
  MultiPoly quotient;  // valid only when divisible
};

/// Exact division p / d. Returns the quotient when p = q*d exactly, else
/// NotDivisible (divisible == false). Throws ZeroDivisorError when d == 0.
/// Performed by leading-term elimination under graded-lex with an iteration
/// cap, then verified by one exact multiplication.
DivisionResult exact_divide(const MultiPoly& p, const MultiPoly& d);

/// Convenience: parse-free construction helpers used by catalog code.
MultiPoly mp_const(long num, long den = 1);
MultiPoly operator*(const ExactScalar& c, const MultiPoly& p);

}  // namespace polydiff
