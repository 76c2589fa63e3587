#include "polydiff/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <sstream>

namespace polydiff {

VarTable::VarTable() {
  // Ambient 3-d coordinates (z last: it is the sphere-reduction eliminator),
  // ambient 4-d coordinates, invariant coordinates, formal variables.
  for (const char* n : {"x", "y", "z", "x1", "y1", "x2", "y2",
                        "t1", "t2", "t3", "e", "u1", "u2", "u3"}) {
    intern(n);
  }
}

VarTable& VarTable::instance() {
  static VarTable table;
  return table;
}

VarId VarTable::intern(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

std::optional<VarId> VarTable::lookup(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& VarTable::name(VarId id) const { return names_.at(id); }

VarId var(const std::string& name) { return VarTable::instance().intern(name); }

bool GrlexLess::operator()(const Exponents& x, const Exponents& y) const {
  assert(x.size() == y.size());
  long dx = 0, dy = 0;
  for (auto e : x) dx += e;
  for (auto e : y) dy += e;
  if (dx != dy) return dx < dy;
  // Same total degree: x < y iff in the first differing slot x has the
  // smaller exponent (earlier variables dominate).
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

MultiPoly MultiPoly::constant(ExactScalar c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(VarId v) {
  MultiPoly p;
  p.vars_ = {v};
  p.terms_.emplace(Exponents{1}, ExactScalar(1));
  return p;
}

MultiPoly MultiPoly::term(ExactScalar c, const std::vector<VarId>& vars,
                          const Exponents& exps) {
  assert(vars.size() == exps.size());
  if (c.is_zero()) return {};
  std::vector<std::pair<VarId, std::uint16_t>> pairs;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] != 0) pairs.emplace_back(vars[i], exps[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  MultiPoly p;
  Exponents e;
  for (auto& [v, k] : pairs) {
    p.vars_.push_back(v);
    e.push_back(k);
  }
  p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

ExactScalar MultiPoly::constant_value() const {
  for (const auto& [e, c] : terms_) {
    bool all_zero = true;
    for (auto k : e) {
      if (k != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) return c;
  }
  return ExactScalar(0);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& lead = terms_.rbegin()->first;
  int d = 0;
  for (auto e : lead) d += e;
  return d;
}

int MultiPoly::degree_in(VarId v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  std::size_t idx = it - vars_.begin();
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, (int)e[idx]);
  return d;
}

long MultiPoly::weighted_degree(const std::map<VarId, long>& weights) const {
  long best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto it = weights.find(vars_[i]);
      w += (long)e[i] * (it == weights.end() ? 1 : it->second);
    }
    best = std::max(best, w);
  }
  return best;
}

namespace {

// Remap `e` (aligned with `from`) onto `to` (a superset of `from`).
Exponents remap(const Exponents& e, const std::vector<VarId>& from,
                const std::vector<VarId>& to) {
  Exponents out(to.size(), 0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    while (to[j] != from[i]) ++j;
    out[j] = e[i];
  }
  return out;
}

std::vector<VarId> union_vars(const std::vector<VarId>& a,
                              const std::vector<VarId>& b) {
  std::vector<VarId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

void MultiPoly::insert_term(const Exponents& e, const ExactScalar& c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::trim() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) used[i] = true;
    }
  }
  bool all = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
  if (all) return;
  std::vector<VarId> new_vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) new_vars.push_back(vars_[i]);
  }
  TermMap new_terms;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(new_vars.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) ne.push_back(e[i]);
    }
    new_terms.emplace(std::move(ne), c);
  }
  vars_ = std::move(new_vars);
  terms_ = std::move(new_terms);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (vars_ == o.vars_) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
  } else {
    std::vector<VarId> uv = union_vars(vars_, o.vars_);
    TermMap merged;
    for (const auto& [e, c] : terms_) merged.emplace(remap(e, vars_, uv), c);
    vars_.swap(uv);
    terms_.swap(merged);
    for (const auto& [e, c] : o.terms_) insert_term(remap(e, o.vars_, vars_), c);
  }
  trim();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  MultiPoly out;
  out.vars_ = union_vars(x.vars_, y.vars_);
  std::vector<Exponents> xe, ye;
  std::vector<const ExactScalar*> xc, yc;
  for (const auto& [e, c] : x.terms_) {
    xe.push_back(remap(e, x.vars_, out.vars_));
    xc.push_back(&c);
  }
  for (const auto& [e, c] : y.terms_) {
    ye.push_back(remap(e, y.vars_, out.vars_));
    yc.push_back(&c);
  }
  Exponents prod(out.vars_.size());
  for (std::size_t i = 0; i < xe.size(); ++i) {
    for (std::size_t j = 0; j < ye.size(); ++j) {
      for (std::size_t k = 0; k < prod.size(); ++k) {
        prod[k] = static_cast<std::uint16_t>(xe[i][k] + ye[j][k]);
      }
      out.insert_term(prod, *xc[i] * *yc[j]);
    }
  }
  out.trim();
  return out;
}

MultiPoly MultiPoly::scaled(const ExactScalar& c) const {
  if (c.is_zero()) return {};
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = one();
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(VarId v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return {};
  std::size_t idx = it - vars_.begin();
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    ne[idx] -= 1;
    out.insert_term(ne, c * ExactScalar((long)e[idx]));
  }
  out.trim();
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& bindings) const {
  // Split variables into bound and kept; expand term by term with cached
  // powers of the images.
  std::vector<int> bound(vars_.size(), -1);
  std::vector<const MultiPoly*> images;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it != bindings.end()) {
      bound[i] = static_cast<int>(images.size());
      images.push_back(&it->second);
    }
  }
  if (images.empty()) return *this;

  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i] = {one()};

  auto power_of = [&](std::size_t img, unsigned k) -> const MultiPoly& {
    auto& cache = powers[img];
    while (cache.size() <= k) cache.push_back(cache.back() * *images[img]);
    return cache[k];
  };

  MultiPoly result;
  for (const auto& [e, c] : terms_) {
    Exponents kept_e;
    std::vector<VarId> kept_v;
    MultiPoly factor = constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (bound[i] >= 0) {
        factor = factor * power_of((std::size_t)bound[i], e[i]);
      } else {
        kept_v.push_back(vars_[i]);
        kept_e.push_back(e[i]);
      }
    }
    if (!kept_v.empty()) factor = factor * term(ExactScalar(1), kept_v, kept_e);
    result += factor;
  }
  return result;
}

MultiPoly MultiPoly::coefficient_of(VarId v, unsigned k) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) {
    if (k == 0) return *this;
    return {};
  }
  std::size_t idx = it - vars_.begin();
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents ne = e;
    ne[idx] = 0;
    out.insert_term(ne, c);
  }
  out.trim();
  return out;
}

double MultiPoly::eval(const std::map<VarId, double>& point) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= std::pow(point.at(vars_[i]), (int)e[i]);
    }
    total += t;
  }
  return total;
}

ExactScalar MultiPoly::eval_exact(const std::map<VarId, ExactScalar>& point) const {
  ExactScalar total(0);
  for (const auto& [e, c] : terms_) {
    ExactScalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const ExactScalar& base = point.at(vars_[i]);
      for (unsigned k = 0; k < e[i]; ++k) t *= base;
    }
    total += t;
  }
  return total;
}

std::pair<Exponents, ExactScalar> MultiPoly::leading_term() const {
  assert(!terms_.empty());
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const ExactScalar& c = it->second;
    std::string cs = c.str();
    if (!first) os << " + ";
    first = false;
    if (cs.find('+') != std::string::npos ||
        cs.find('r') != std::string::npos) {
      os << "(" << cs << ")";
    } else {
      os << cs;
    }
    bool any = false;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << (any ? " " : " * ") << VarTable::instance().name(vars_[i]);
      if (it->first[i] > 1) os << "^" << (int)it->first[i];
      any = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.str();
}

DivisionResult exact_divide(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw ZeroDivisorError();
  if (p.is_zero()) return {true, MultiPoly{}};

  const std::vector<VarId> dv = d.vars();
  auto [dlead_e, dlead_c] = d.leading_term();

  // Leading-term elimination with a termination cap; correctness is
  // re-checked below by one exact multiplication.
  long cap = (long)(p.total_degree() + 1) * (long)p.term_count() + 8;
  MultiPoly r = p;
  MultiPoly q;
  while (!r.is_zero() && cap-- > 0) {
    auto [rl_e, rl_c] = r.leading_term();
    const std::vector<VarId>& rv = r.vars();
    // Divide leading monomials: every d-variable exponent must fit in r.
    Exponents qe;
    std::vector<VarId> qv;
    bool ok = true;
    std::size_t ri = 0;
    std::vector<std::uint16_t> used_r(rv.size(), 0);
    for (std::size_t i = 0; i < dv.size() && ok; ++i) {
      if (dlead_e[i] == 0) continue;
      while (ri < rv.size() && rv[ri] < dv[i]) ++ri;
      if (ri >= rv.size() || rv[ri] != dv[i] || rl_e[ri] < dlead_e[i]) {
        ok = false;
        break;
      }
      used_r[ri] = dlead_e[i];
    }
    if (!ok) return {};  // leading term not divisible => p not divisible
    for (std::size_t i = 0; i < rv.size(); ++i) {
      std::uint16_t rem = static_cast<std::uint16_t>(rl_e[i] - used_r[i]);
      if (rem != 0) {
        qv.push_back(rv[i]);
        qe.push_back(rem);
      }
    }
    MultiPoly qt = MultiPoly::term(rl_c / dlead_c, qv, qe);
    q += qt;
    r -= qt * d;
  }
  if (!r.is_zero()) return {};
  if (q * d != p) return {};
  return {true, std::move(q)};
}

MultiPoly mp_const(long num, long den) {
  return MultiPoly::constant(ExactScalar(num, den));
}

MultiPoly operator*(const ExactScalar& c, const MultiPoly& p) {
  return p.scaled(c);
}

}  // namespace polydiff
