#include "polydiff/groups.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polydiff {

std::vector<VarId> ambient_vars(int dim) {
  if (dim == 2) return {var("x"), var("y")};
  if (dim == 3) return {var("x"), var("y"), var("z")};
  return {var("x1"), var("y1"), var("x2"), var("y2")};
}

OrthogonalElement::OrthogonalElement(int dim, ScalarMat m)
    : dim_(dim), m_(std::move(m)) {
  assert((int)m_.size() == dim_);
  for (const auto& row : m_) assert((int)row.size() == dim_);
  // M^T M = Id, exactly.
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      ExactScalar acc(0);
      for (int k = 0; k < dim_; ++k) acc += m_[k][i] * m_[k][j];
      if (acc != ExactScalar(i == j ? 1 : 0)) {
        throw Error("matrix is not exactly orthogonal");
      }
    }
  }
  const ExactScalar d = det();
  if (d != ExactScalar(1) && d != ExactScalar(-1)) {
    throw Error("orthogonal matrix determinant is not +-1");
  }
}

OrthogonalElement OrthogonalElement::operator*(const OrthogonalElement& o) const {
  assert(dim_ == o.dim_);
  ScalarMat r(dim_, ScalarVec(dim_, ExactScalar(0)));
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      if (m_[i][k].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) r[i][j] += m_[i][k] * o.m_[k][j];
    }
  }
  return OrthogonalElement(dim_, std::move(r));
}

OrthogonalElement OrthogonalElement::transpose() const {
  ScalarMat r(dim_, ScalarVec(dim_, ExactScalar(0)));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) r[i][j] = m_[j][i];
  }
  return OrthogonalElement(dim_, std::move(r));
}

ExactScalar OrthogonalElement::det() const { return scalar_matrix_det(m_); }

ExactScalar OrthogonalElement::trace() const {
  ExactScalar t(0);
  for (int i = 0; i < dim_; ++i) t += m_[i][i];
  return t;
}

bool OrthogonalElement::operator<(const OrthogonalElement& o) const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      int c = ExactScalar::compare_repr(m_[i][j], o.m_[i][j]);
      if (c != 0) return c < 0;
    }
  }
  return false;
}

OrthogonalElement OrthogonalElement::identity(int dim) {
  ScalarMat m(dim, ScalarVec(dim, ExactScalar(0)));
  for (int i = 0; i < dim; ++i) m[i][i] = ExactScalar(1);
  return OrthogonalElement(dim, std::move(m));
}

OrthogonalElement OrthogonalElement::central_symmetry(int dim) {
  ScalarMat m(dim, ScalarVec(dim, ExactScalar(0)));
  for (int i = 0; i < dim; ++i) m[i][i] = ExactScalar(-1);
  return OrthogonalElement(dim, std::move(m));
}

OrthogonalElement OrthogonalElement::rotation_about(const ScalarVec& v,
                                                    const ExactScalar& cos_phi,
                                                    const ExactScalar& sin_over_norm) {
  // Rodrigues with exact combined coefficients:
  //   R = cos*I + (sin/|v|) [v]_x + ((1-cos)/|v|^2) v v^T,
  // and (1-cos)/|v|^2 = (sin/|v|)^2 / (1+cos).
  assert(v.size() == 3);
  const ExactScalar one(1);
  const ExactScalar k2 = sin_over_norm * sin_over_norm / (one + cos_phi);
  ScalarMat m(3, ScalarVec(3, ExactScalar(0)));
  const ExactScalar& vx = v[0];
  const ExactScalar& vy = v[1];
  const ExactScalar& vz = v[2];
  m[0][0] = cos_phi + k2 * vx * vx;
  m[0][1] = k2 * vx * vy - sin_over_norm * vz;
  m[0][2] = k2 * vx * vz + sin_over_norm * vy;
  m[1][0] = k2 * vy * vx + sin_over_norm * vz;
  m[1][1] = cos_phi + k2 * vy * vy;
  m[1][2] = k2 * vy * vz - sin_over_norm * vx;
  m[2][0] = k2 * vz * vx - sin_over_norm * vy;
  m[2][1] = k2 * vz * vy + sin_over_norm * vx;
  m[2][2] = cos_phi + k2 * vz * vz;
  return OrthogonalElement(3, std::move(m));
}

std::string OrthogonalElement::str() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i || j) os << " ";
      os << m_[i][j].str();
    }
  }
  return os.str();
}

FiniteGroup::FiniteGroup(std::string name, int dim,
                         std::vector<OrthogonalElement> elements)
    : name_(std::move(name)), dim_(dim), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end(),
                              [](const auto& a, const auto& b) { return a == b; }),
                  elements_.end());
}

bool FiniteGroup::contains(const OrthogonalElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g,
                            [](const auto& a, const auto& b) { return a < b; });
}

bool FiniteGroup::verify_group_axioms() const {
  if (!contains(OrthogonalElement::identity(dim_))) return false;
  for (const auto& g : elements_) {
    if (!contains(g.transpose())) return false;
    for (const auto& h : elements_) {
      if (!contains(g * h)) return false;
    }
  }
  return true;
}

std::string FiniteGroup::dump() const {
  std::ostringstream os;
  for (const auto& g : elements_) os << g.str() << "\n";
  return os.str();
}

FiniteGroup generate_group(const std::vector<OrthogonalElement>& generators,
                           const std::string& name, std::size_t cap) {
  assert(!generators.empty());
  const int dim = generators[0].dim();
  std::set<OrthogonalElement> seen;
  seen.insert(OrthogonalElement::identity(dim));
  std::vector<OrthogonalElement> frontier(seen.begin(), seen.end());
  for (const auto& g : generators) {
    if (seen.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<OrthogonalElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        for (const OrthogonalElement& prod : {g * s, s * g}) {
          if (seen.insert(prod).second) {
            next.push_back(prod);
            if (seen.size() > cap) throw ClosureCapExceededError(cap);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return FiniteGroup(name, dim, std::vector<OrthogonalElement>(seen.begin(), seen.end()));
}

namespace {

ExactScalar half() { return ExactScalar(1, 2); }

// cos(2*pi/n) for the supported orders.
ExactScalar exact_cos(int n) {
  switch (n) {
    case 1: return ExactScalar(1);
    case 2: return ExactScalar(-1);
    case 3: return ExactScalar(-1, 2);
    case 4: return ExactScalar(0);
    case 5: return ExactScalar(Rational(-1, 4), Rational(1, 4), 5);   // (sqrt5-1)/4
    case 6: return half();
    case 10: return ExactScalar(Rational(1, 4), Rational(1, 4), 5);   // (1+sqrt5)/4
    default: throw UnsupportedOrderError("no exact matrices for order " + std::to_string(n));
  }
}

struct Frame {
  ScalarVec axis;                // rotation axis of C_n
  ExactScalar sin_over_norm;     // sin(2*pi/n)/|axis|
  OrthogonalElement flip;        // 2-fold rotation about an axis perpendicular
                                 // to `axis`, completing D_n
};

// Every supported order admits an exact frame: n = 1,2,4 about the z-axis,
// n = 3,6 about the cube diagonal (rational matrices), n = 5,10 about an
// icosahedron vertex axis (entries in Q(sqrt5)).
Frame frame_for(int n) {
  const ExactScalar zero(0), one(1);
  auto diag_flip = [] {
    // 2-fold about (1,-1,0), perpendicular to the cube diagonal.
    ScalarMat f(3, ScalarVec(3, ExactScalar(0)));
    f[0][1] = ExactScalar(-1);
    f[1][0] = ExactScalar(-1);
    f[2][2] = ExactScalar(-1);
    return OrthogonalElement(3, std::move(f));
  };
  auto x_flip = [] {
    ScalarMat f(3, ScalarVec(3, ExactScalar(0)));
    f[0][0] = ExactScalar(1);
    f[1][1] = ExactScalar(-1);
    f[2][2] = ExactScalar(-1);
    return OrthogonalElement(3, std::move(f));
  };
  switch (n) {
    case 1:
    case 2:
    case 4: {
      ExactScalar s = n == 1 ? zero : (n == 2 ? zero : one);
      return Frame{{zero, zero, one}, s, x_flip()};
    }
    case 3:
    case 6: {
      // axis (1,1,1): sin(2pi/3)/sqrt(3) = 1/2, sin(pi/3)/sqrt(3) = 1/2.
      return Frame{{one, one, one}, half(), diag_flip()};
    }
    case 5: {
      // axis (0,1,c) with c the golden ratio: sin(2pi/5)/|v| = 1/2.
      return Frame{{zero, one, ExactScalar::golden()}, half(), x_flip()};
    }
    case 10: {
      // sin(pi/5)/|v| = (sqrt5-1)/4.
      return Frame{{zero, one, ExactScalar::golden()},
                   ExactScalar(Rational(-1, 4), Rational(1, 4), 5), x_flip()};
    }
    default:
      throw UnsupportedOrderError("no exact matrices for order " + std::to_string(n));
  }
}

OrthogonalElement cyclic_generator(int n) {
  const Frame f = frame_for(n);
  return OrthogonalElement::rotation_about(f.axis, exact_cos(n), f.sin_over_norm);
}

FiniteGroup cyclic(int n) {
  return generate_group({cyclic_generator(n)}, "C" + std::to_string(n));
}

FiniteGroup dihedral(int n) {
  const Frame f = frame_for(n);
  return generate_group({cyclic_generator(n), f.flip}, "D" + std::to_string(n));
}

std::vector<OrthogonalElement> with_central(const FiniteGroup& g) {
  std::vector<OrthogonalElement> out = g.elements();
  const auto j = OrthogonalElement::central_symmetry(g.dim());
  for (const auto& e : g.elements()) out.push_back(j * e);
  return out;
}

// G1 | G = G1 union { J h : h in G \ G1 }; requires [G : G1] = 2.
FiniteGroup mixed(const FiniteGroup& g1, const FiniteGroup& g, const std::string& name) {
  if (g.size() != 2 * g1.size()) {
    throw Error("index-2 construction requires |G| = 2|G1|");
  }
  std::vector<OrthogonalElement> out = g1.elements();
  const auto j = OrthogonalElement::central_symmetry(g.dim());
  for (const auto& h : g.elements()) {
    if (!g1.contains(h)) out.push_back(j * h);
  }
  FiniteGroup result(name, g.dim(), std::move(out));
  if (result.size() != g.size() || !result.verify_group_axioms()) {
    throw Error("index-2 construction failed for " + name);
  }
  return result;
}

OrthogonalElement cyclic_perm3() {
  ScalarMat m(3, ScalarVec(3, ExactScalar(0)));
  m[0][2] = ExactScalar(1);
  m[1][0] = ExactScalar(1);
  m[2][1] = ExactScalar(1);
  return OrthogonalElement(3, std::move(m));
}

OrthogonalElement axis_flip_x() {
  ScalarMat m(3, ScalarVec(3, ExactScalar(0)));
  m[0][0] = ExactScalar(1);
  m[1][1] = ExactScalar(-1);
  m[2][2] = ExactScalar(-1);
  return OrthogonalElement(3, std::move(m));
}

OrthogonalElement rot_z_quarter() {
  ScalarMat m(3, ScalarVec(3, ExactScalar(0)));
  m[0][1] = ExactScalar(-1);
  m[1][0] = ExactScalar(1);
  m[2][2] = ExactScalar(1);
  return OrthogonalElement(3, std::move(m));
}

FiniteGroup tetrahedral() {
  return generate_group({axis_flip_x(), cyclic_perm3()}, "T");
}

FiniteGroup octahedral() {
  return generate_group({axis_flip_x(), cyclic_perm3(), rot_z_quarter()}, "O");
}

FiniteGroup icosahedral() {
  return generate_group({cyclic_perm3(), cyclic_generator(5)}, "I");
}

FiniteGroup cornulier_group(int p) {
  if (p != 3) {
    throw UnsupportedOrderError(
        "cornulier group needs exact cos and sin of 2*pi/p; only p = 3 is supported");
  }
  // 2x2 rotation by 2*pi/3 in each complex plane, plus the plane swap.
  const ExactScalar c(-1, 2);
  const ExactScalar s(Rational(0), Rational(1, 2), 3);  // sqrt(3)/2
  ScalarMat n1(4, ScalarVec(4, ExactScalar(0)));
  n1[0][0] = c; n1[0][1] = -s;
  n1[1][0] = s; n1[1][1] = c;
  n1[2][2] = ExactScalar(1);
  n1[3][3] = ExactScalar(1);
  ScalarMat n2(4, ScalarVec(4, ExactScalar(0)));
  n2[0][0] = ExactScalar(1);
  n2[1][1] = ExactScalar(1);
  n2[2][2] = c; n2[2][3] = -s;
  n2[3][2] = s; n2[3][3] = c;
  ScalarMat j(4, ScalarVec(4, ExactScalar(0)));
  j[0][2] = ExactScalar(1);
  j[1][3] = ExactScalar(1);
  j[2][0] = ExactScalar(1);
  j[3][1] = ExactScalar(1);
  return generate_group({OrthogonalElement(4, std::move(n1)),
                         OrthogonalElement(4, std::move(n2)),
                         OrthogonalElement(4, std::move(j))},
                        "cornulier" + std::to_string(p));
}

void expect_size(const FiniteGroup& g, std::size_t n) {
  if (g.size() != n) {
    throw Error("group " + g.name() + " has " + std::to_string(g.size()) +
                " elements, expected " + std::to_string(n));
  }
}

struct ParsedLabel {
  std::string kind;
  std::optional<int> n;
};

ParsedLabel parse_label(const std::string& raw) {
  // Normalize: strip '_', '|', spaces; uppercase letters.
  std::string s;
  for (char ch : raw) {
    if (ch == '_' || ch == '|' || ch == ' ') continue;
    s.push_back((char)std::toupper((unsigned char)ch));
  }
  // "CORNULIER" optionally followed by p.
  if (s.rfind("CORNULIER", 0) == 0) {
    std::string digits = s.substr(9);
    if (digits.empty()) return {"cornulier", std::nullopt};
    return {"cornulier", std::stoi(digits)};
  }
  // Letter groups with optional inline digits: C5, D3, C5D5, D3D6, C3C6,
  // CJ, C5J, TJ, TO, T, O, I, IJ, OJ, CNDN etc.
  std::string letters;
  std::vector<int> numbers;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isdigit((unsigned char)s[i])) {
      int v = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        v = v * 10 + (s[i] - '0');
        ++i;
      }
      numbers.push_back(v);
    } else {
      letters.push_back(s[i]);
      ++i;
    }
  }
  // Drop placeholder N's as in "CNDN".
  std::string key;
  for (char ch : letters) {
    if (ch != 'N') key.push_back(ch);
  }
  std::optional<int> n;
  if (!numbers.empty()) n = numbers[0];
  return {key, n};
}

}  // namespace

FiniteGroup construct_named(const std::string& label, std::optional<int> n_opt) {
  ParsedLabel p = parse_label(label);
  if (!p.n && n_opt) p.n = n_opt;

  auto need_n = [&]() -> int {
    if (!p.n) throw UnsupportedOrderError("group " + label + " requires an order n");
    return *p.n;
  };

  const std::string& k = p.kind;
  if (k == "cornulier") {
    FiniteGroup g = cornulier_group(p.n.value_or(3));
    expect_size(g, 2u * (std::size_t)(p.n.value_or(3)) * (std::size_t)(p.n.value_or(3)));
    return g;
  }
  if (k == "T") { auto g = tetrahedral(); expect_size(g, 12); return g; }
  if (k == "O") { auto g = octahedral(); expect_size(g, 24); return g; }
  if (k == "I") { auto g = icosahedral(); expect_size(g, 60); return g; }
  if (k == "TJ") {
    auto g = FiniteGroup("T_J", 3, with_central(tetrahedral()));
    expect_size(g, 24); return g;
  }
  if (k == "OJ") {
    auto g = FiniteGroup("O_J", 3, with_central(octahedral()));
    expect_size(g, 48); return g;
  }
  if (k == "IJ") {
    auto g = FiniteGroup("I_J", 3, with_central(icosahedral()));
    expect_size(g, 120); return g;
  }
  if (k == "TO") {
    auto g = mixed(tetrahedral(), octahedral(), "T|O");
    expect_size(g, 24); return g;
  }
  if (k == "C") {
    int n = need_n();
    auto g = cyclic(n);
    expect_size(g, (std::size_t)n);
    return g;
  }
  if (k == "D") {
    int n = need_n();
    auto g = dihedral(n);
    expect_size(g, 2u * (std::size_t)n);
    return g;
  }
  if (k == "CJ") {
    int n = need_n();
    auto g = FiniteGroup("C" + std::to_string(n) + "_J", 3, with_central(cyclic(n)));
    expect_size(g, 2u * (std::size_t)n);
    return g;
  }
  if (k == "DJ") {
    int n = need_n();
    auto g = FiniteGroup("D" + std::to_string(n) + "_J", 3, with_central(dihedral(n)));
    expect_size(g, 4u * (std::size_t)n);
    return g;
  }
  if (k == "CD") {
    int n = need_n();
    auto g = mixed(cyclic(n), dihedral(n), "C" + std::to_string(n) + "|D" + std::to_string(n));
    expect_size(g, 2u * (std::size_t)n);
    return g;
  }
  if (k == "CC") {
    int n = need_n();
    auto g = mixed(cyclic(n), cyclic(2 * n),
                   "C" + std::to_string(n) + "|C" + std::to_string(2 * n));
    expect_size(g, 2u * (std::size_t)n);
    return g;
  }
  if (k == "DD") {
    int n = need_n();
    auto g = mixed(dihedral(n), dihedral(2 * n),
                   "D" + std::to_string(n) + "|D" + std::to_string(2 * n));
    expect_size(g, 4u * (std::size_t)n);
    return g;
  }
  throw UnsupportedOrderError("unknown group label: " + label);
}

MultiPoly group_action(const MultiPoly& p, const OrthogonalElement& g,
                       const std::vector<VarId>& ambient) {
  // x_i -> sum_j (g^T)_{ij} x_j = sum_j g_{ji} x_j.
  std::map<VarId, MultiPoly> binding;
  for (int i = 0; i < g.dim(); ++i) {
    MultiPoly image;
    for (int j = 0; j < g.dim(); ++j) {
      if (!g.at(j, i).is_zero()) {
        image += g.at(j, i) * MultiPoly::variable(ambient[j]);
      }
    }
    binding[ambient[i]] = image;
  }
  return p.substitute(binding);
}

InvarianceVerdict is_invariant_serial(const MultiPoly& p, const FiniteGroup& g) {
  const auto ambient = ambient_vars(g.dim());
  for (const auto& el : g.elements()) {
    if (group_action(p, el, ambient) != p) return {false, el};
  }
  return {};
}

InvarianceVerdict is_invariant(const MultiPoly& p, const FiniteGroup& g) {
  const auto ambient = ambient_vars(g.dim());
  const auto& els = g.elements();
  int violator = -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < (long)els.size(); ++i) {
    bool skip;
#ifdef _OPENMP
#pragma omp atomic read
    skip = (violator >= 0);
#else
    skip = (violator >= 0);
#endif
    if (skip) continue;
    if (group_action(p, els[i], ambient) != p) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (violator < 0 || i < violator) violator = (int)i;
      }
    }
  }
  if (violator >= 0) return {false, els[violator]};
  return {};
}

MolienSeries molien(const FiniteGroup& g, std::size_t truncation) {
  // det(Id - t g) depends only on the conjugacy class; dedupe by the
  // polynomial itself to keep the rational-function sum short.
  std::map<std::string, std::pair<UniPoly, long>> classes;
  for (const auto& el : g.elements()) {
    UniPoly f = char_factor(el.matrix());
    std::string key = f.str();
    auto it = classes.find(key);
    if (it == classes.end()) {
      classes.emplace(key, std::make_pair(std::move(f), 1L));
    } else {
      it->second.second += 1;
    }
  }
  RationalFunction sum;
  for (auto& [key, fc] : classes) {
    sum = sum + RationalFunction(UniPoly::constant(ExactScalar(fc.second)), fc.first);
  }
  sum = sum.scaled(ExactScalar(1, (long)g.size()));

  for (const auto& c : sum.num().coeffs()) {
    if (!c.is_rational()) throw IrrationalSeriesError();
  }
  for (const auto& c : sum.den().coeffs()) {
    if (!c.is_rational()) throw IrrationalSeriesError();
  }

  MolienSeries out;
  out.numerator = sum.num();
  out.denominator = sum.den();
  std::vector<ExactScalar> series = sum.series(truncation + 1);
  for (const auto& v : series) {
    if (!v.is_rational()) throw IrrationalSeriesError();
    const Rational& q = v.rat();
    if (q.get_den() != 1 || q < 0) {
      throw Error("Molien coefficient is not a non-negative integer: " + v.str());
    }
    out.coefficients.push_back((long)q.get_num().get_si());
  }
  if (out.coefficients.empty() || out.coefficients[0] != 1) {
    throw Error("Molien series must start with d_0 = 1");
  }
  return out;
}

namespace {

std::vector<Exponents> homogeneous_exponents(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  // Lexicographic enumeration of compositions of `degree` into nvars parts.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nvars - 1) {
      cur[pos] = (std::uint16_t)remaining;
      out.push_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[pos] = (std::uint16_t)v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, degree);
  return out;
}

// Column of the action of el on the homogeneous monomial basis.
void action_columns(const OrthogonalElement& el,
                    const std::vector<Exponents>& basis,
                    const std::map<Exponents, int>& index,
                    const std::vector<VarId>& ambient, ScalarMat* acc) {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    MultiPoly m = MultiPoly::term(ExactScalar(1), ambient, basis[j]);
    MultiPoly img = group_action(m, el, ambient);
    // Expand onto the basis (align variables to ambient order).
    for (const auto& [e, c] : img.terms()) {
      Exponents full(ambient.size(), 0);
      const auto& iv = img.vars();
      for (std::size_t k = 0, a = 0; k < iv.size(); ++k) {
        while (ambient[a] != iv[k]) ++a;
        full[a] = e[k];
      }
      (*acc)[index.at(full)][j] += c;
    }
  }
}

ScalarMat reynolds_matrix(const FiniteGroup& g, int degree, bool parallel) {
  const auto ambient = ambient_vars(g.dim());
  const auto basis = homogeneous_exponents(g.dim(), degree);
  std::map<Exponents, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;

  const std::size_t n = basis.size();
  ScalarMat total(n, ScalarVec(n, ExactScalar(0)));
  const auto& els = g.elements();
  if (!parallel) {
    for (const auto& el : els) action_columns(g, el, basis, index, ambient, &total);
  } else {
#ifdef _OPENMP
#pragma omp parallel
    {
      ScalarMat local(n, ScalarVec(n, ExactScalar(0)));
#pragma omp for schedule(dynamic) nowait
      for (long i = 0; i < (long)els.size(); ++i) {
        action_columns(g, els[i], basis, index, ambient, &local);
      }
#pragma omp critical
      {
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) total[r][c] += local[r][c];
        }
      }
    }
#else
    for (const auto& el : els) action_columns(g, el, basis, index, ambient, &total);
#endif
  }
  const ExactScalar inv_order(1, (long)g.size());
  for (auto& row : total) {
    for (auto& v : row) v *= inv_order;
  }
  return total;
}

}  // namespace

int reynolds_dimension(const FiniteGroup& g, int degree) {
  return matrix_rank(reynolds_matrix(g, degree, true));
}

int reynolds_dimension_serial(const FiniteGroup& g, int degree) {
  return matrix_rank(reynolds_matrix(g, degree, false));
}

MultiPoly reynolds_average(const MultiPoly& p, const FiniteGroup& g) {
  const auto ambient = ambient_vars(g.dim());
  MultiPoly acc;
  for (const auto& el : g.elements()) acc += group_action(p, el, ambient);
  return ExactScalar(1, (long)g.size()) * acc;
}

namespace {

// Complex-monomial expansion: p(x,y,z) = sum c_{abk} Z^a Zbar^b z^k with
// Z = x + iy. Coefficients are pairs (re, im) over the scalar field.
struct CTerm {
  ExactScalar re, im;
};
using CPoly = std::map<std::array<int, 3>, CTerm>;

void cpoly_add(CPoly& p, std::array<int, 3> key, const CTerm& v) {
  auto& slot = p[key];
  slot.re += v.re;
  slot.im += v.im;
  if (slot.re.is_zero() && slot.im.is_zero()) p.erase(key);
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CPoly to_complex_basis(const MultiPoly& p) {
  const VarId vx = var("x"), vy = var("y"), vz = var("z");
  CPoly out;
  const auto& vars = p.vars();
  for (const auto& [e, c] : p.terms()) {
    int i = 0, j = 0, k = 0;
    for (std::size_t s = 0; s < vars.size(); ++s) {
      if (vars[s] == vx) i = e[s];
      else if (vars[s] == vy) j = e[s];
      else if (vars[s] == vz) k = e[s];
      else if (e[s] != 0) throw Error("axial test expects variables x, y, z only");
    }
    // x^i = ((Z+Zb)/2)^i, y^j = ((Z-Zb)/(2i))^j = (-i/2)^j (Z-Zb)^j.
    // (-i)^j cycles 1, -i, -1, i.
    ExactScalar base_re(0), base_im(0);
    switch (j % 4) {
      case 0: base_re = ExactScalar(1); break;
      case 1: base_im = ExactScalar(-1); break;
      case 2: base_re = ExactScalar(-1); break;
      case 3: base_im = ExactScalar(1); break;
    }
    const ExactScalar scale = c * ExactScalar(1, 1L << std::min(i + j, 62));
    // Guard: exponents in this artifact stay far below 62 bits.
    if (i + j >= 62) throw Error("axial test exponent overflow");
    for (int s = 0; s <= i; ++s) {
      for (int t = 0; t <= j; ++t) {
        // coefficient binom(i,s) * binom(j,t) * (-1)^(j-t)
        ExactScalar coef((long)(binom(i, s) * binom(j, t) * (((j - t) % 2) ? -1 : 1)));
        coef *= scale;
        CTerm v{coef * base_re, coef * base_im};
        cpoly_add(out, {s + t, i - s + j - t, k}, v);
      }
    }
  }
  return out;
}

}  // namespace

bool axial_invariant(const MultiPoly& p, AxialFamily family, int n) {
  const CPoly cp = to_complex_basis(p);

  // Generator conditions on exponents (a, b, k):
  auto rot_ok = [&](const std::array<int, 3>& m) {
    return ((m[0] - m[1]) % n + n) % n == 0;
  };
  auto j_ok = [&](const std::array<int, 3>& m) {
    return (m[0] + m[1] + m[2]) % 2 == 0;
  };
  auto jrot_half_ok = [&](const std::array<int, 3>& m) {
    // J o R(pi/n): multiplier exp(i pi ((a-b) + n(a+b+k)) / n) must be 1.
    long v = (long)(m[0] - m[1]) + (long)n * (m[0] + m[1] + m[2]);
    return ((v % (2L * n)) + 2L * n) % (2L * n) == 0;
  };
  // Coefficient-transport conditions for the reflections.
  auto flip_ok = [&]() {
    for (const auto& [m, v] : cp) {
      auto it = cp.find({m[1], m[0], m[2]});
      const ExactScalar s((m[2] % 2) ? -1L : 1L);
      if (it == cp.end()) return false;
      if (it->second.re != s * v.re || it->second.im != s * v.im) return false;
    }
    return true;
  };
  auto jflip_ok = [&]() {
    for (const auto& [m, v] : cp) {
      auto it = cp.find({m[1], m[0], m[2]});
      const ExactScalar s(((m[0] + m[1]) % 2) ? -1L : 1L);
      if (it == cp.end()) return false;
      if (it->second.re != s * v.re || it->second.im != s * v.im) return false;
    }
    return true;
  };

  auto all_terms = [&](auto&& cond) {
    for (const auto& [m, v] : cp) {
      if (!cond(m)) return false;
    }
    return true;
  };

  switch (family) {
    case AxialFamily::Cn:
      return all_terms(rot_ok);
    case AxialFamily::Dn:
      return all_terms(rot_ok) && flip_ok();
    case AxialFamily::CnJ:
      return all_terms(rot_ok) && all_terms(j_ok);
    case AxialFamily::DnJ:
      return all_terms(rot_ok) && all_terms(j_ok) && flip_ok();
    case AxialFamily::CnC2n:
      return all_terms(rot_ok) && all_terms(jrot_half_ok);
    case AxialFamily::CnDn:
      return all_terms(rot_ok) && jflip_ok();
    case AxialFamily::DnD2n:
      return all_terms(rot_ok) && flip_ok() && all_terms(jrot_half_ok);
  }
  return false;
}

}  // namespace polydiff
