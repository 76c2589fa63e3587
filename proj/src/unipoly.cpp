#include "polydiff/unipoly.hpp"

#include <cassert>
#include <sstream>

namespace polydiff {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::one_minus_tk(unsigned k) {
  std::vector<ExactScalar> c(k + 1, ExactScalar(0));
  c[0] = ExactScalar(1);
  c[k] = ExactScalar(-1);
  return UniPoly(std::move(c));
}

const ExactScalar& UniPoly::operator[](std::size_t i) const {
  static const ExactScalar kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<ExactScalar> c(std::max(a.c_.size(), b.c_.size()), ExactScalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactScalar> c(a.c_.size() + b.c_.size() - 1, ExactScalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const ExactScalar& s) const {
  if (s.is_zero()) return {};
  UniPoly out = *this;
  for (auto& v : out.c_) v *= s;
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
  assert(!d.is_zero());
  UniPoly r = *this;
  std::vector<ExactScalar> q;
  if (degree() >= d.degree()) q.assign(degree() - d.degree() + 1, ExactScalar(0));
  const ExactScalar lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const ExactScalar f = r.leading() * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) {
      r.c_[i + shift] -= f * d.c_[i];
    }
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

ExactScalar UniPoly::eval(const ExactScalar& x) const {
  ExactScalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<ExactScalar> UniPoly::inverse_series(std::size_t n_terms) const {
  assert(!is_zero() && !c_[0].is_zero());
  std::vector<ExactScalar> s(n_terms, ExactScalar(0));
  const ExactScalar inv0 = c_[0].inverse();
  for (std::size_t n = 0; n < n_terms; ++n) {
    ExactScalar acc = n == 0 ? ExactScalar(1) : ExactScalar(0);
    for (std::size_t k = 1; k <= n && k < c_.size(); ++k) {
      acc -= c_[k] * s[n - k];
    }
    s[n] = acc * inv0;
  }
  return s;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].str();
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  assert(!den_.is_zero());
  if (num_.is_zero()) {
    den_ = UniPoly::constant(ExactScalar(1));
    return;
  }
  UniPoly g = uni_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  const ExactScalar lead_inv = den_.leading().inverse();
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction RationalFunction::scaled(const ExactScalar& s) const {
  RationalFunction out;
  out.num_ = num_.scaled(s);
  out.den_ = den_;
  return out;
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::vector<ExactScalar> RationalFunction::series(std::size_t n_terms) const {
  std::vector<ExactScalar> dinv = den_.inverse_series(n_terms);
  std::vector<ExactScalar> out(n_terms, ExactScalar(0));
  for (std::size_t n = 0; n < n_terms; ++n) {
    ExactScalar acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
      const ExactScalar& nk = num_[k];
      if (!nk.is_zero()) acc += nk * dinv[n - k];
    }
    out[n] = acc;
  }
  return out;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

UniPoly char_factor(const ScalarMat& g) {
  const std::size_t n = g.size();
  // det(I - t g) = sum_k (-1)^k e_k t^k, e_k = sum of principal k-minors.
  std::vector<ExactScalar> c(n + 1, ExactScalar(0));
  c[0] = ExactScalar(1);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    ExactScalar ek(0);
    do {
      ScalarMat sub(k, ScalarVec(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = g[idx[i]][idx[j]];
      }
      ek += scalar_matrix_det(sub);
    } while (next_combination(idx, n));
    if (k % 2 == 1) ek = -ek;
    c[k] = ek;
  }
  return UniPoly(std::move(c));
}

UniPoly char_poly(const ScalarMat& m) {
  const std::size_t n = m.size();
  // Faddeev-LeVerrier: coefficients of det(tI - M).
  std::vector<ExactScalar> c(n + 1, ExactScalar(0));
  c[n] = ExactScalar(1);
  ScalarMat aux(n, ScalarVec(n, ExactScalar(0)));  // M_k accumulator
  ScalarMat mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // mk = m * (mk + c[n-k+1] * I)
      ScalarMat tmp = mk;
      for (std::size_t i = 0; i < n; ++i) tmp[i][i] += c[n - k + 1];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ExactScalar acc(0);
          for (std::size_t l = 0; l < n; ++l) acc += m[i][l] * tmp[l][j];
          aux[i][j] = acc;
        }
      }
      mk = aux;
    }
    ExactScalar tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
    c[n - k] = tr / ExactScalar((long)k);
    c[n - k] = -c[n - k];
  }
  return UniPoly(std::move(c));
}

}  // namespace polydiff
