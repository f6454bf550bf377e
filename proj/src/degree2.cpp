#include "jacdiv/degree2.hpp"

#include <random>

#include "jacdiv/errors.hpp"
#include "jacdiv/factor.hpp"
#include "jacdiv/gcd.hpp"

namespace jacdiv {

unsigned map_degree(const PolyMap& map, const GeometryOptions& options, unsigned trials) {
  Poly jac = jacobian_det(map);
  if (jac.is_zero()) throw InputError("degree: the map is not dominant");
  std::mt19937_64 rng(options.seed);
  std::optional<std::uint64_t> agreed;
  unsigned counted = 0;
  for (unsigned attempt = 0; attempt < options.retry_cap && counted < trials; ++attempt) {
    Point a = random_point(rng, map.size(), options.bound);
    if (evaluate(jac, a) == 0) continue;
    auto f = fiber(map, evaluate(map, a), options.groebner);
    if (!f.finite) continue;
    // A fully rational fiber must avoid the ramification locus.
    if (f.solutions.size() == f.count) {
      bool unramified = true;
      for (const auto& p : f.solutions) unramified = unramified && evaluate(jac, p) != 0;
      if (!unramified) continue;
    }
    if (agreed && *agreed != f.count) {
      throw InvariantViolation("degree: generic fiber counts disagree (" + std::to_string(*agreed) + " vs " +
                               std::to_string(f.count) + ")");
    }
    agreed = f.count;
    ++counted;
  }
  if (counted < trials) throw CapacityError("degree: no zero-dimensional generic fiber within the retry cap");
  return static_cast<unsigned>(*agreed);
}

AntiInvariant anti_invariant(const PolyMap& map, const GeometryOptions& options) {
  unsigned degree = map_degree(map, options);
  if (degree != 2) throw InputError("anti_invariant: map has degree " + std::to_string(degree) + ", expected 2");
  for (const auto& r : classify_jacobian_divisors(map, options)) {
    if (r.divisor_class == DivisorClass::Contracted) {
      throw InputError("anti_invariant: V(" + render(r.factor) + ") is contracted");
    }
  }
  Poly jac = jacobian_det(map);
  auto fac = factor(jac, options.factor);
  if (fac.factors.size() != 1 || fac.factors.front().second != 1) {
    throw InvariantViolation("anti_invariant: Jacobian determinant " + render(jac) + " is not irreducible");
  }
  AntiInvariant out;
  out.s = normalize(jac);
  out.scale = jac.leading_coeff() / out.s.leading_coeff();
  PullbackBasis pullback(map, options.groebner);
  if (pullback.membership(out.s)) {
    throw InvariantViolation("anti_invariant: " + render(out.s) + " lies in the pullback subalgebra");
  }
  auto square = pullback.membership(out.s * out.s);
  if (!square) throw InvariantViolation("anti_invariant: s^2 does not lie in the pullback subalgebra");
  out.S = *square;
  return out;
}

namespace {

using RPoly = gb::GPoly<RatFunc>;

// p(X) - p(a): X are the engine variables, a the parameters of `params`.
RPoly shifted(const Poly& p, const VarCtx& params, const MonomialOrder& ord) {
  RPoly out;
  for (const auto& t : p.terms()) out.push_back({t.mono, RatFunc::constant(params, t.coeff)});
  out.push_back({Monomial{}, -RatFunc(remap_by_name(p, params))});
  gb::sort_terms(out, ord);
  return out;
}

std::optional<std::vector<RatFunc>> read_point(const std::vector<RPoly>& basis, std::size_t n, const VarCtx& params) {
  if (basis.size() != n) return std::nullopt;
  std::vector<RatFunc> point(n, RatFunc(Poly(params)));
  std::vector<bool> seen(n, false);
  for (const auto& b : basis) {
    const Monomial& lead = b.front().mono;
    if (lead.degree() != 1 || b.size() > 2) return std::nullopt;
    std::size_t j = 0;
    while (lead[j] == 0) ++j;
    if (b.size() == 2) {
      if (!b.back().mono.is_one()) return std::nullopt;
      point[j] = -(b.back().coeff / b.front().coeff);
    }
    seen[j] = true;
  }
  for (bool s : seen) {
    if (!s) return std::nullopt;
  }
  return point;
}

}  // namespace

RatFunc apply(const Involution& theta, const RatFunc& r) { return compose(r, theta.components); }

Involution involution(const PolyMap& map, const GeometryOptions& options) {
  unsigned degree = map_degree(map, options);
  if (degree != 2) throw InputError("involution: map has degree " + std::to_string(degree) + ", expected 2");
  const std::size_t n = map.size();
  const VarCtx& params = map.ctx();
  const auto grev = MonomialOrder::grevlex(n);
  const RatFunc one = RatFunc::constant(params, 1);
  std::vector<RPoly> gens;
  for (const auto& f : map.components()) {
    RPoly g = shifted(f, params, grev);
    if (!g.empty()) gens.push_back(std::move(g));
  }
  std::mt19937_64 rng(options.seed ^ 0x5eed);
  std::uniform_int_distribution<int> coeff(1, 9);
  for (unsigned attempt = 0; attempt < options.retry_cap; ++attempt) {
    Poly ell(params);
    for (std::size_t i = 0; i < n; ++i) ell += Rat(coeff(rng)) * Poly::variable(params, i);
    RPoly sat = shifted(ell, params, grev);
    auto basis = gb::saturate(gens, sat, n, one, options.groebner);
    auto point = read_point(basis, n, params);
    if (!point) continue;
    Involution theta;
    theta.components = std::move(*point);
    theta.preserves_map = true;
    for (const auto& f : map.components()) {
      theta.preserves_map = theta.preserves_map && apply(theta, RatFunc(f)) == RatFunc(f);
    }
    theta.is_involutive = true;
    for (std::size_t j = 0; j < n; ++j) {
      RatFunc xj(Poly::variable(params, j));
      theta.is_involutive = theta.is_involutive && apply(theta, theta.components[j]) == xj;
    }
    if (!theta.preserves_map || !theta.is_involutive) {
      throw InvariantViolation("involution: recovered map is not a deck involution");
    }
    Poly jac = jacobian_det(map);
    theta.negates_jacobian = verify_anti_invariance(theta, normalize(jac));
    return theta;
  }
  throw InvariantViolation("involution: the generic fiber did not yield a second rational point");
}

bool verify_anti_invariance(const Involution& theta, const Poly& s) {
  RatFunc r(s);
  return apply(theta, r) == -r;
}

bool denominator_check(const Involution& theta, const PolyMap& map, const GroebnerLimits& limits) {
  PullbackBasis pullback(map, limits);
  for (const auto& c : theta.components) {
    if (c.den().is_constant()) continue;
    if (!pullback.membership(c.den())) return false;
  }
  return true;
}

AuxiliaryMaps auxiliary_maps(const PolyMap& map, const Poly& s) {
  require_same_ctx(s.ctx(), map.ctx(), "auxiliary_maps");
  AuxiliaryMaps aux;
  aux.maps.push_back(map);
  for (std::size_t j = 0; j < map.size(); ++j) {
    auto comps = map.components();
    comps[j] = s;
    aux.maps.emplace_back(map.ctx(), std::move(comps));
  }
  for (const auto& m : aux.maps) aux.determinants.push_back(jacobian_det(m));
  return aux;
}

bool auxiliary_gcd_check(const PolyMap& map, const Poly& s) {
  auto aux = auxiliary_maps(map, s);
  Poly g(map.ctx());
  for (const auto& d : aux.determinants) {
    if (d.is_zero()) continue;
    g = g.is_zero() ? normalize(d) : gcd(g, d);
  }
  return !g.is_zero() && g.is_constant();
}

Poly semiinvariant_from_generator(const PolyMap& map, const Involution& theta, const Poly& h,
                                  const GeometryOptions& options) {
  require_same_ctx(h.ctx(), map.ctx(), "semiinvariant_from_generator");
  RatFunc tilde = RatFunc(h) - apply(theta, RatFunc(h));
  if (tilde.is_zero()) throw InputError("semiinvariant: " + render(h) + " is invariant under the involution");
  PullbackBasis pullback(map, options.groebner);
  Poly multiplier = tilde.den();
  if (!pullback.membership(multiplier)) {
    multiplier = Poly::constant(map.ctx(), 1);
    const unsigned power = static_cast<unsigned>(std::max(h.total_degree(), 1));
    for (const auto& c : theta.components) {
      if (!c.den().is_constant()) multiplier *= pow(c.den(), power);
    }
  }
  RatFunc cleared = tilde * RatFunc(multiplier);
  if (!cleared.is_polynomial()) throw InvariantViolation("semiinvariant: denominator not cleared by K[f]");
  Poly st = cleared.num() * (1 / cleared.den().constant_value());
  auto big_s = pullback.membership(st * st);
  if (!big_s) throw InvariantViolation("semiinvariant: square of the cleared difference is not in K[f]");
  Poly square_part = Poly::constant(big_s->ctx(), 1);
  if (!big_s->is_constant()) {
    for (const auto& [q, m] : squarefree_decomposition(*big_s).factors) square_part *= pow(q, m / 2);
  }
  Poly s = normalize(exact_quotient(st, compose(square_part, map)));
  Poly jac = normalize(jacobian_det(map));
  if (s != jac) {
    bool contracted = false;
    for (const auto& r : classify_jacobian_divisors(map, options)) {
      contracted = contracted || r.divisor_class == DivisorClass::Contracted;
    }
    if (!contracted) {
      throw InvariantViolation("semiinvariant: " + render(s) + " is not proportional to the Jacobian determinant");
    }
  }
  return s;
}

}  // namespace jacdiv
