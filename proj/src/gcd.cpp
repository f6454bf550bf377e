#include "jacdiv/gcd.hpp"

#include <algorithm>
#include <map>

#include "jacdiv/errors.hpp"

namespace jacdiv {

namespace {

Poly one(const VarCtx& ctx) { return Poly::constant(ctx, Rat(1)); }

Poly monomial_gcd(const Monomial& m, const Poly& p) {
  Monomial g = m;
  for (const auto& t : p.terms()) g = gcd(g, t.mono);
  return Poly::monomial(p.ctx(), g, Rat(1));
}

Poly v_power(const VarCtx& ctx, std::size_t v, unsigned e) {
  return Poly::monomial(ctx, Monomial::variable(v, e), Rat(1));
}

Poly leading_coeff_in(const Poly& p, std::size_t v, int deg) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (static_cast<int>(t.mono[v]) != deg) continue;
    Monomial m = t.mono;
    m.set(v, 0);
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(p.ctx(), std::move(out));
}

// Pseudo-remainder of a by b with respect to v, scaled by a power of the
// leading coefficient of b. Only its primitive part matters to callers.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Poly lcb = leading_coeff_in(b, v, db);
  int da = a.degree_in(v);
  while (!a.is_zero() && da >= db) {
    Poly lca = leading_coeff_in(a, v, da);
    a = lcb * a - lca * v_power(a.ctx(), v, static_cast<unsigned>(da - db)) * b;
    a = normalize(a);
    da = a.degree_in(v);
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_rec(const Poly& p, std::size_t v) {
  auto coeffs = coefficients_in(p, v);
  Poly g(p.ctx());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd_rec(g, normalize(c));
    if (g.is_constant()) return one(p.ctx());
  }
  return g;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  const VarCtx& ctx = a.ctx();
  if (a.is_constant() || b.is_constant()) return one(ctx);
  if (a.size() == 1) return monomial_gcd(a.leading_term().mono, b);
  if (b.size() == 1) return monomial_gcd(b.leading_term().mono, a);

  const std::size_t n = ctx.size();
  // A variable present in only one argument is removed by taking content.
  for (std::size_t v = 0; v < n; ++v) {
    bool in_a = a.involves(v);
    bool in_b = b.involves(v);
    if (in_a && !in_b) return gcd_rec(content_rec(a, v), b);
    if (in_b && !in_a) return gcd_rec(a, content_rec(b, v));
  }

  std::size_t v = n;
  int best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.involves(i)) continue;
    int cost = std::max(a.degree_in(i), b.degree_in(i));
    if (v == n || cost < best) {
      v = i;
      best = cost;
    }
  }

  Poly ca = content_rec(a, v);
  Poly cb = content_rec(b, v);
  Poly gc = gcd_rec(ca, cb);
  Poly pa = normalize(exact_quotient(a, ca));
  Poly pb = normalize(exact_quotient(b, cb));
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = one(ctx);
      break;
    }
    pa = std::move(pb);
    pb = normalize(exact_quotient(r, content_rec(r, v)));
  }
  return normalize(gc * pb);
}

}  // namespace

Poly expand(const VarCtx& ctx, const Factorization& f) {
  Poly r = Poly::constant(ctx, f.unit);
  for (const auto& [q, m] : f.factors) r *= pow(q, m);
  return r;
}

std::optional<Poly> divides(const Poly& a, const Poly& b) {
  require_same_ctx(a.ctx(), b.ctx(), "divides");
  if (a.is_zero()) throw InputError("divides: divisor is zero");
  if (b.is_zero()) return Poly(b.ctx());
  const Term& lt = a.leading_term();
  if (a.size() == 1) {
    std::vector<Term> q;
    q.reserve(b.size());
    for (const auto& t : b.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      q.push_back({t.mono / lt.mono, t.coeff / lt.coeff});
    }
    return Poly::from_terms(b.ctx(), std::move(q));
  }
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.degree_in(i) > b.degree_in(i)) return std::nullopt;
  }
  std::vector<Term> quotient;
  Poly r = b;
  while (!r.is_zero()) {
    const Term& rt = r.leading_term();
    if (!lt.mono.divides(rt.mono)) return std::nullopt;
    Term q{rt.mono / lt.mono, rt.coeff / lt.coeff};
    r -= Poly::monomial(b.ctx(), q.mono, q.coeff) * a;
    quotient.push_back(std::move(q));
  }
  return Poly::from_terms(b.ctx(), std::move(quotient));
}

Poly exact_quotient(const Poly& b, const Poly& a) {
  auto q = divides(a, b);
  if (!q) throw InvariantViolation("exact division failed: (" + render(b) + ") / (" + render(a) + ")");
  return std::move(*q);
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_ctx(a.ctx(), b.ctx(), "gcd");
  if (a.is_zero() && b.is_zero()) throw InputError("gcd: both arguments are zero");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  return normalize(gcd_rec(normalize(a), normalize(b)));
}

std::vector<Poly> coefficients_in(const Poly& p, std::size_t v) {
  int d = p.degree_in(v);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.set(v, 0);
    buckets[t.mono[v]].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(p.ctx(), std::move(b)));
  return out;
}

Poly content_in(const Poly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return normalize(content_rec(normalize(p), v));
}

namespace {

void yun(const Poly& q, std::size_t v, std::map<unsigned, Poly>& acc) {
  Poly dq = partial(q, v);
  Poly g = gcd(q, dq);
  Poly c = exact_quotient(q, g);
  Poly d = exact_quotient(dq, g) - partial(c, v);
  unsigned i = 1;
  while (!c.is_constant()) {
    Poly a = gcd(c, d);
    if (!a.is_constant()) {
      auto [it, inserted] = acc.try_emplace(i, a);
      if (!inserted) it->second = it->second * a;
    }
    c = exact_quotient(c, a);
    d = exact_quotient(d, a) - partial(c, v);
    ++i;
  }
}

void squarefree_rec(const Poly& p, std::map<unsigned, Poly>& acc) {
  if (p.is_constant()) return;
  std::size_t v = 0;
  while (!p.involves(v)) ++v;
  Poly c = content_in(p, v);
  yun(normalize(exact_quotient(p, c)), v, acc);
  squarefree_rec(c, acc);
}

}  // namespace

Factorization squarefree_decomposition(const Poly& p) {
  if (p.is_constant()) throw InputError("squarefree_decomposition: constant input");
  std::map<unsigned, Poly> acc;
  squarefree_rec(normalize(p), acc);
  Factorization f;
  Poly prod = Poly::constant(p.ctx(), Rat(1));
  for (auto& [m, q] : acc) {
    Poly nq = normalize(q);
    prod *= pow(nq, m);
    f.factors.emplace_back(std::move(nq), m);
  }
  // prod is primitive; the ratio of leading coefficients is the unit.
  f.unit = p.leading_coeff() / prod.leading_coeff();
  return f;
}

bool is_squarefree(const Poly& p) {
  if (p.is_constant()) return true;
  auto f = squarefree_decomposition(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace jacdiv
