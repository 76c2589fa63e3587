#include "polydiff/sphereops.hpp"

#include <cassert>
#include <map>

namespace polydiff {

MultiPoly reduce_square(const MultiPoly& p, VarId v,
                        const MultiPoly& replacement) {
  const int dv = p.degree_in(v);
  if (dv <= 1) return p;
  // p = sum_k v^k c_k(rest); v^k = v^(k mod 2) * replacement^(k/2).
  std::vector<MultiPoly> rep_pow = {MultiPoly::one()};
  auto pow_of = [&](unsigned q) -> const MultiPoly& {
    while (rep_pow.size() <= q) rep_pow.push_back(rep_pow.back() * replacement);
    return rep_pow[q];
  };
  MultiPoly out;
  const MultiPoly v_poly = MultiPoly::variable(v);
  for (int k = 0; k <= dv; ++k) {
    MultiPoly ck = p.coefficient_of(v, (unsigned)k);
    if (ck.is_zero()) continue;
    MultiPoly t = ck * pow_of((unsigned)(k / 2));
    if (k % 2 == 1) t = t * v_poly;
    out += t;
  }
  return out;
}

SphereContext::SphereContext(std::vector<std::string> ambient_names) {
  for (const auto& n : ambient_names) ambient_.push_back(var(n));
  MultiPoly rep = MultiPoly::one();
  for (std::size_t i = 0; i + 1 < ambient_.size(); ++i) {
    rep -= MultiPoly::variable(ambient_[i]).pow(2);
  }
  last_sq_replacement_ = rep;
}

SphereContext SphereContext::dim2() { return SphereContext({"x", "y"}); }
SphereContext SphereContext::dim3() { return SphereContext({"x", "y", "z"}); }
SphereContext SphereContext::dim4() {
  return SphereContext({"x1", "y1", "x2", "y2"});
}

SpherePoly SphereContext::reduce(const MultiPoly& p) const {
  return {reduce_square(p, ambient_.back(), last_sq_replacement_), true};
}

bool SphereContext::is_reduced(const MultiPoly& p) const {
  return p.degree_in(ambient_.back()) <= 1;
}

SpherePoly SphereContext::gamma(const MultiPoly& p, const MultiPoly& q) const {
  MultiPoly grad_dot;
  MultiPoly euler_p, euler_q;
  for (VarId v : ambient_) {
    const MultiPoly dp = p.derivative(v);
    const MultiPoly dq = q.derivative(v);
    grad_dot += dp * dq;
    const MultiPoly xv = MultiPoly::variable(v);
    euler_p += xv * dp;
    euler_q += xv * dq;
  }
  return reduce(grad_dot - euler_p * euler_q);
}

MultiPoly SphereContext::ambient_laplacian(const MultiPoly& p) const {
  MultiPoly out;
  for (VarId v : ambient_) out += p.derivative(v).derivative(v);
  return out;
}

SpherePoly SphereContext::laplacian(const MultiPoly& p) const {
  // Split into homogeneous components in the ambient variables.
  std::map<int, MultiPoly> comps;
  const auto& vars = p.vars();
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) deg += e[i];
    comps[deg] += MultiPoly::term(c, vars, e);
  }
  const long d = dim();
  MultiPoly out;
  for (auto& [k, pk] : comps) {
    out += ambient_laplacian(pk) - ExactScalar((long)k * (k + d - 2)) * pk;
  }
  return reduce(out);
}

SphereContext::AxiomVerdict SphereContext::check_diffusion_axioms(
    const std::vector<MultiPoly>& f, const MultiPoly& phi,
    const MultiPoly& g) const {
  const std::size_t k = f.size();
  std::map<VarId, MultiPoly> binding;
  std::vector<VarId> u(k);
  for (std::size_t i = 0; i < k; ++i) {
    u[i] = var("u" + std::to_string(i + 1));
    binding[u[i]] = f[i];
  }
  const MultiPoly phi_f = phi.substitute(binding);

  MultiPoly rhs_l;
  for (std::size_t i = 0; i < k; ++i) {
    const MultiPoly dphi_i = phi.derivative(u[i]).substitute(binding);
    rhs_l += dphi_i * laplacian(f[i]).value;
    for (std::size_t j = 0; j < k; ++j) {
      const MultiPoly d2 = phi.derivative(u[i]).derivative(u[j]).substitute(binding);
      rhs_l += d2 * gamma(f[i], f[j]).value;
    }
  }
  MultiPoly rhs_g;
  for (std::size_t i = 0; i < k; ++i) {
    const MultiPoly dphi_i = phi.derivative(u[i]).substitute(binding);
    rhs_g += dphi_i * gamma(f[i], g).value;
  }

  AxiomVerdict v;
  v.residual_l = (laplacian(phi_f).value - reduce(rhs_l).value);
  v.residual_l = reduce(v.residual_l).value;
  v.residual_gamma = reduce(gamma(phi_f, g).value - reduce(rhs_g).value).value;
  v.pass = v.residual_l.is_zero() && v.residual_gamma.is_zero();
  return v;
}

}  // namespace polydiff
