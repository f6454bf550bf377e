#include "jacdiv/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "jacdiv/errors.hpp"
#include "jacdiv/gcd.hpp"

namespace jacdiv {

Point random_point(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Point p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(dist(rng));
  return p;
}

std::string to_string(DivisorClass c) { return c == DivisorClass::Contracted ? "Contracted" : "Branching"; }

std::string to_string(IrreducibilityFlag f) { return f == IrreducibilityFlag::Verified ? "verified" : "unverified"; }

bool is_dominant(const PolyMap& map) { return !jacobian_det(map).is_zero(); }

bool has_linear_variable(const Poly& h) {
  for (std::size_t i = 0; i < h.nvars(); ++i) {
    if (h.degree_in(i) == 1) return true;
  }
  return false;
}

namespace {

// Context (x_1..x_n, Y_1..Y_n) with the source variables first.
VarCtx joint_ctx(const PolyMap& map) {
  auto names = map.ctx().names();
  VarCtx image = image_ctx(map.ctx());
  for (const auto& y : image.names()) names.push_back(y);
  return VarCtx(std::move(names));
}

Poly lift(const Poly& p, const VarCtx& joint) {
  std::vector<std::size_t> idx(p.nvars());
  std::iota(idx.begin(), idx.end(), 0);
  return remap(p, joint, idx);
}

void require_nonconstant(const Poly& h, const char* what) {
  if (h.is_constant()) throw InputError(std::string(what) + ": polynomial must be nonconstant");
}

void require_irreducible(const Poly& h, const char* what) {
  require_nonconstant(h, what);
  auto f = factor(h);
  if (f.factors.size() != 1 || f.factors.front().second != 1) {
    throw InputError(std::string(what) + ": " + render(h) + " is not irreducible");
  }
}

// Row vector grad(H)(f) * J(f).
std::vector<Poly> conormal_row(const Poly& image_poly, const PolyMap& map) {
  const std::size_t n = map.size();
  auto jac = jacobian_matrix(map);
  std::vector<Poly> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(compose(partial(image_poly, i), map));
  std::vector<Poly> row;
  for (std::size_t j = 0; j < n; ++j) {
    Poly acc(map.ctx());
    for (std::size_t i = 0; i < n; ++i) acc += grad[i] * jac(i, j);
    row.push_back(std::move(acc));
  }
  return row;
}

// h restricted to the line p + t*d, as a polynomial in a single variable.
Poly restrict_to_line(const Poly& h, const Point& p, const Point& d) {
  VarCtx line({"t"});
  Poly t = Poly::variable(line, 0);
  Poly acc(line);
  for (const auto& term : h.terms()) {
    Poly prod = Poly::constant(line, term.coeff);
    for (std::size_t i = 0; i < h.nvars(); ++i) {
      if (term.mono[i] != 0) prod *= pow(t * d[i] + p[i], term.mono[i]);
    }
    acc += prod;
  }
  return acc;
}

std::optional<Point> sample_on_hypersurface(const Poly& h, std::mt19937_64& rng, int bound) {
  const std::size_t n = h.nvars();
  for (std::size_t v = 0; v < n; ++v) {
    if (h.degree_in(v) != 1) continue;
    auto coeffs = coefficients_in(h, v);
    Point p = random_point(rng, n, bound);
    Rat a = evaluate(coeffs[1], p);
    if (a == 0) return std::nullopt;
    p[v] = -evaluate(coeffs[0], p) / a;
    return p;
  }
  Point p = random_point(rng, n, bound);
  Point d = random_point(rng, n, 10);
  Poly g = restrict_to_line(h, p, d);
  if (g.is_constant()) return std::nullopt;
  auto roots = rational_roots_in(g, 0);
  if (roots.empty()) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) p[i] += roots.front() * d[i];
  return p;
}

}  // namespace

GroebnerBasis image_closure(const Poly& h, const PolyMap& map, const GroebnerLimits& limits) {
  require_same_ctx(h.ctx(), map.ctx(), "image_closure");
  require_nonconstant(h, "image_closure");
  const std::size_t n = map.size();
  VarCtx joint = joint_ctx(map);
  std::vector<Poly> gens{lift(h, joint)};
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Poly::variable(joint, n + i) - lift(map[i], joint));
  std::vector<std::size_t> keep(n);
  std::iota(keep.begin(), keep.end(), n);
  return elimination_ideal(Ideal(joint, std::move(gens)), keep, limits);
}

bool is_contracted(const Poly& h, const PolyMap& map, const GroebnerLimits& limits) {
  require_irreducible(h, "is_contracted");
  return ideal_dimension(image_closure(h, map, limits)) < static_cast<int>(map.size()) - 1;
}

bool contracted_rank_check(const Poly& h, const PolyMap& map, const GeometryOptions& options) {
  require_same_ctx(h.ctx(), map.ctx(), "contracted_rank_check");
  if (h.is_zero() || h.is_constant()) throw InputError("contracted_rank_check: h must be nonconstant");
  const std::size_t n = map.size();
  std::mt19937_64 rng(options.seed);
  auto jac = jacobian_matrix(map);
  std::vector<Poly> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(partial(h, i));
  unsigned sampled = 0;
  for (unsigned attempt = 0; attempt < options.retry_cap && sampled < options.rank_trials; ++attempt) {
    auto point = sample_on_hypersurface(h, rng, options.bound);
    if (!point) continue;
    Point g;
    for (const auto& d : grad) g.push_back(evaluate(d, *point));
    auto pivot = std::find_if(g.begin(), g.end(), [](const Rat& r) { return r != 0; });
    if (pivot == g.end()) continue;
    const std::size_t k = static_cast<std::size_t>(pivot - g.begin());
    auto j = evaluate(jac, *point);
    // Images of the tangent basis e_c - (g_c / g_k) e_k.
    std::vector<std::vector<Rat>> images;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == k) continue;
      std::vector<Rat> col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = j[r][c] - g[c] / g[k] * j[r][k];
      images.push_back(std::move(col));
    }
    ++sampled;
    if (rank(images) + 1 >= n) return false;
  }
  if (sampled == 0) throw CapacityError("contracted_rank_check: no smooth point of V(" + render(h) + ") found");
  return true;
}

Poly image_polynomial(const Poly& h, const PolyMap& map, const GroebnerLimits& limits) {
  auto img = image_closure(h, map, limits);
  if (ideal_dimension(img) < static_cast<int>(map.size()) - 1) {
    throw InputError("image_polynomial: V(" + render(h) + ") is contracted");
  }
  if (img.is_zero_ideal()) throw InvariantViolation("image_polynomial: image of V(" + render(h) + ") is dense");
  const auto& basis = img.basis();
  auto lowest = std::min_element(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) {
    return a.total_degree() < b.total_degree();
  });
  for (const auto& b : basis) {
    if (!divides(*lowest, b)) throw InvariantViolation("image_polynomial: image ideal is not principal");
  }
  return normalize(*lowest);
}

bool is_branching(const Poly& h, const PolyMap& map, const GroebnerLimits& limits) {
  Poly image = image_polynomial(h, map, limits);
  return divides(h * h, compose(image, map)).has_value();
}

bool conormal_check(const Poly& h, const PolyMap& map, const GroebnerLimits& limits) {
  Poly image = image_polynomial(h, map, limits);
  for (const auto& entry : conormal_row(image, map)) {
    if (!divides(h, entry)) return false;
  }
  return true;
}

std::pair<Poly, Poly> contracted_witness(const Poly& h, const PolyMap& map, const GeometryOptions& options) {
  auto img = image_closure(h, map, options.groebner);
  if (ideal_dimension(img) >= static_cast<int>(map.size()) - 1) {
    throw InputError("contracted_witness: V(" + render(h) + ") is not contracted");
  }
  auto by_size = [](const Poly& a, const Poly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return render(a) < render(b);
  };
  std::vector<Poly> members;
  auto collect = [&](const Poly& p) {
    if (p.is_constant()) return;
    for (const auto& [q, m] : factor(p, options.factor).factors) {
      if (img.contains(q) && std::find(members.begin(), members.end(), q) == members.end()) members.push_back(q);
    }
  };
  auto find_pair = [&]() -> std::optional<std::pair<Poly, Poly>> {
    std::sort(members.begin(), members.end(), by_size);
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (gcd(members[a], members[b]).is_constant()) return std::pair{members[a], members[b]};
      }
    }
    return std::nullopt;
  };
  for (const auto& b : img.basis()) collect(b);
  if (auto pair = find_pair()) return *pair;
  std::mt19937_64 rng(options.seed);
  const auto& basis = img.basis();
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (unsigned attempt = 0; attempt < options.retry_cap; ++attempt) {
    Poly combo(img.ctx());
    for (int k = 0; k < 2; ++k) combo += Rat(coeff(rng)) * basis[pick(rng)];
    collect(combo);
    if (auto pair = find_pair()) return *pair;
  }
  throw InvariantViolation("contracted_witness: no coprime pair found for V(" + render(h) + ")");
}

std::vector<DivisorReport> classify_jacobian_divisors(const PolyMap& map, const GeometryOptions& options) {
  Poly jac = jacobian_det(map);
  if (jac.is_zero()) throw InputError("classify: the map is not dominant (Jacobian determinant is zero)");
  std::vector<DivisorReport> out;
  if (jac.is_constant()) return out;
  for (const auto& [h, m] : factor(jac, options.factor).factors) {
    DivisorReport r;
    r.factor = h;
    r.multiplicity = m;
    r.irreducibility = has_linear_variable(h) ? IrreducibilityFlag::Verified : IrreducibilityFlag::Unverified;
    auto img = image_closure(h, map, options.groebner);
    if (ideal_dimension(img) < static_cast<int>(map.size()) - 1) {
      r.divisor_class = DivisorClass::Contracted;
      r.witness = contracted_witness(h, map, options);
    } else {
      Poly image = image_polynomial(h, map, options.groebner);
      auto quotient = divides(h * h, compose(image, map));
      if (!quotient) {
        throw InvariantViolation("classify: V(" + render(h) + ") is neither contracted nor branching");
      }
      r.divisor_class = DivisorClass::Branching;
      r.image_polynomial = image;
      r.branching_quotient = *quotient;
      bool conormal = true;
      for (const auto& entry : conormal_row(image, map)) conormal = conormal && divides(h, entry).has_value();
      r.conormal = conormal;
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

void back_substitute(const std::vector<Poly>& lex_basis, std::size_t k, Point& partial_point, std::vector<Point>& out) {
  const std::size_t n = partial_point.size();
  Poly g(lex_basis.front().ctx());
  for (const auto& b : lex_basis) {
    bool inside = std::all_of(b.terms().begin(), b.terms().end(),
                              [&](const Term& t) { return t.mono.supported_in(k, n); });
    if (!inside) continue;
    Poly q = b;
    for (std::size_t j = k + 1; j < n; ++j) q = substitute(q, j, partial_point[j]);
    if (q.is_zero()) continue;
    g = g.is_zero() ? normalize(q) : gcd(g, q);
  }
  if (g.is_zero()) throw InvariantViolation("fiber: coordinate not determined by a zero-dimensional basis");
  if (g.is_constant()) return;
  for (const auto& root : rational_roots_in(g, k)) {
    partial_point[k] = root;
    if (k == 0) {
      out.push_back(partial_point);
    } else {
      back_substitute(lex_basis, k - 1, partial_point, out);
    }
  }
}

}  // namespace

FiberResult fiber(const PolyMap& map, std::span<const Rat> target, const GroebnerLimits& limits) {
  const std::size_t n = map.size();
  if (target.size() != n) throw InputError("fiber: target point has the wrong number of coordinates");
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Poly g = map[i] - target[i];
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  FiberResult r;
  if (gens.empty()) {
    r.finite = false;
    r.dimension = static_cast<int>(n);
    return r;
  }
  Ideal ideal(map.ctx(), gens);
  auto grev = buchberger(ideal, MonomialOrder::grevlex(n), limits);
  if (grev.is_unit()) return r;
  auto count = standard_monomial_count(grev);
  if (!count) {
    r.finite = false;
    r.dimension = ideal_dimension(grev);
    return r;
  }
  r.count = *count;
  auto lex = buchberger(ideal, MonomialOrder::lex(n), limits);
  Point partial_point(n);
  back_substitute(lex.basis(), n - 1, partial_point, r.solutions);
  std::sort(r.solutions.begin(), r.solutions.end());
  return r;
}

FiberProductIdeal fiber_product_ideal(const PolyMap& map) {
  const std::size_t n = map.size();
  if (2 * n > kMaxVars) throw CapacityError("fiber product: too many variables");
  std::vector<std::string> names;
  for (const auto& v : map.ctx().names()) names.push_back(v + "1");
  for (const auto& v : map.ctx().names()) names.push_back(v + "2");
  FiberProductIdeal z{VarCtx(std::move(names)), {}, {}};
  std::vector<std::size_t> first(n);
  std::vector<std::size_t> second(n);
  std::iota(first.begin(), first.end(), 0);
  std::iota(second.begin(), second.end(), n);
  for (std::size_t j = 0; j < n; ++j) {
    z.generators.push_back(remap(map[j], z.ctx, first) - remap(map[j], z.ctx, second));
    z.diagonal.push_back(Poly::variable(z.ctx, j) - Poly::variable(z.ctx, n + j));
  }
  return z;
}

GroebnerBasis off_diagonal_part(const FiberProductIdeal& z, const GeometryOptions& options) {
  std::vector<Poly> gens;
  for (const auto& g : z.generators) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) throw InputError("off_diagonal_part: fiber product ideal is zero");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coeff(1, 9);
  Poly ell(z.ctx);
  for (const auto& d : z.diagonal) ell += Rat(coeff(rng)) * d;
  return saturate(Ideal(z.ctx, std::move(gens)), ell, options.groebner);
}

KellerReport keller_checks(const PolyMap& map, std::span<const Poly> squarefree_samples,
                           std::span<const std::pair<Poly, Poly>> coprime_pairs) {
  Poly jac = jacobian_det(map);
  if (jac.is_zero() || !jac.is_constant()) {
    throw InputError("keller_checks: Jacobian determinant " + render(jac) + " is not a nonzero constant");
  }
  KellerReport report;
  for (const auto& h : squarefree_samples) {
    if (h.is_constant() || !is_squarefree(h)) {
      ++report.skipped;
      continue;
    }
    ++report.squarefree_checked;
    Poly pulled = compose(h, map);
    if (!is_squarefree(pulled)) report.violations.push_back("pullback of " + render(h) + " is not square-free");
  }
  for (const auto& [a, b] : coprime_pairs) {
    if (a.is_zero() || b.is_zero() || !gcd(a, b).is_constant()) {
      ++report.skipped;
      continue;
    }
    ++report.coprime_checked;
    Poly pa = compose(a, map);
    Poly pb = compose(b, map);
    if (!gcd(pa, pb).is_constant()) {
      report.violations.push_back("pullbacks of " + render(a) + " and " + render(b) + " share a factor");
    }
  }
  return report;
}

}  // namespace jacdiv
