#include "jacdiv/factor.hpp"

#include <algorithm>

#include "jacdiv/errors.hpp"
#include "upoly.hpp"

namespace jacdiv {

namespace {

using detail::ZPoly;

// Variables of q with their degrees and Kronecker weights.
struct Kronecker {
  std::vector<std::size_t> vars;
  std::vector<unsigned> degs;
  std::vector<Int> weights;
  Int top;  // largest image exponent

  explicit Kronecker(const Poly& q) {
    Int w = 1;
    top = 0;
    for (std::size_t v = 0; v < q.nvars(); ++v) {
      int d = q.degree_in(v);
      if (d <= 0) continue;
      vars.push_back(v);
      degs.push_back(static_cast<unsigned>(d));
      weights.push_back(w);
      top += w * d;
      w *= d + 1;
    }
  }

  ZPoly image(const Poly& q) const {
    ZPoly u(top.get_ui() + 1, Int(0));
    for (const auto& t : q.terms()) {
      unsigned long e = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) e += weights[i].get_ui() * t.mono[vars[i]];
      u[e] = t.coeff.get_num();
    }
    detail::trim(u);
    return u;
  }

  // Inverse substitution of t^shift * g; nothing if an exponent leaves the box.
  std::optional<Poly> preimage(const VarCtx& ctx, const ZPoly& g, unsigned long shift) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      unsigned long e = i + shift;
      if (e > top.get_ui()) return std::nullopt;
      Monomial m;
      for (std::size_t k = vars.size(); k-- > 0;) {
        unsigned long w = weights[k].get_ui();
        unsigned long digit = e / w;
        if (digit > degs[k]) return std::nullopt;
        m.set(vars[k], static_cast<unsigned>(digit));
        e -= digit * w;
      }
      terms.push_back({m, Rat(g[i])});
    }
    return Poly::from_terms(ctx, std::move(terms));
  }
};

std::vector<Poly> factor_squarefree_multi(const Poly& q, const FactorLimits& limits);

std::vector<Poly> kronecker_factor(const Poly& q, const FactorLimits& limits) {
  Kronecker kr(q);
  if (kr.top > limits.max_kronecker_degree) {
    throw CapacityError("factor: Kronecker image degree " + kr.top.get_str() + " exceeds limit " +
                        std::to_string(limits.max_kronecker_degree));
  }
  ZPoly u = kr.image(q);
  unsigned long shift = 0;
  while (u[shift] == 0) ++shift;
  u.erase(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(shift));

  std::vector<ZPoly> pool = detail::factor_with_repeats(u);
  if (pool.size() <= 1) return {q};
  if (pool.size() > limits.max_recombination_pool) {
    throw CapacityError("factor: " + std::to_string(pool.size()) +
                        " univariate factors exceed the recombination limit");
  }

  std::vector<Poly> result;
  Poly rest = q;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (!found) {
      ZPoly g{Int(1)};
      for (auto i : idx) g = detail::mul(g, pool[i]);
      for (unsigned long j = 0; j <= shift && !found; ++j) {
        auto h = kr.preimage(q.ctx(), g, j);
        if (!h || h->is_constant()) continue;
        if (auto quo = divides(*h, rest)) {
          result.push_back(normalize(*h));
          rest = std::move(*quo);
          shift -= j;
          std::vector<ZPoly> next;
          for (std::size_t i = 0, t = 0; i < pool.size(); ++i) {
            if (t < idx.size() && idx[t] == i) {
              ++t;
              continue;
            }
            next.push_back(std::move(pool[i]));
          }
          pool = std::move(next);
          found = true;
        }
      }
      if (found) break;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == pool.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (!rest.is_constant()) result.push_back(normalize(rest));
  return result;
}

std::vector<Poly> factor_squarefree_multi(const Poly& q, const FactorLimits& limits) {
  if (q.is_constant()) return {};
  for (std::size_t v = 0; v < q.nvars(); ++v) {
    if (!q.involves(v)) continue;
    Poly c = content_in(q, v);
    if (c.is_constant()) continue;
    auto out = factor_squarefree_multi(c, limits);
    auto more = factor_squarefree_multi(normalize(exact_quotient(q, c)), limits);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }
  // Primitive of degree one in some variable: a*v + b with gcd(a, b) = 1.
  for (std::size_t v = 0; v < q.nvars(); ++v) {
    if (q.degree_in(v) == 1) return {q};
  }
  return kronecker_factor(q, limits);
}

}  // namespace

Factorization factor(const Poly& p, const FactorLimits& limits) {
  if (p.is_constant()) throw InputError("factor: constant input");
  if (p.total_degree() > limits.max_total_degree) {
    throw CapacityError("factor: total degree " + std::to_string(p.total_degree()) + " exceeds limit " +
                        std::to_string(limits.max_total_degree));
  }
  std::size_t involved = 0;
  for (std::size_t v = 0; v < p.nvars(); ++v) involved += p.involves(v) ? 1 : 0;
  if (involved > limits.max_variables) {
    throw CapacityError("factor: " + std::to_string(involved) + " variables exceed limit " +
                        std::to_string(limits.max_variables));
  }

  std::vector<std::pair<Poly, unsigned>> acc;
  auto add = [&acc](const Poly& h, unsigned m) {
    for (auto& [g, k] : acc) {
      if (g == h) {
        k += m;
        return;
      }
    }
    acc.emplace_back(h, m);
  };

  Poly pn = normalize(p);
  Monomial mc = pn.leading_term().mono;
  for (const auto& t : pn.terms()) mc = gcd(mc, t.mono);
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (mc[v] > 0) add(Poly::variable(p.ctx(), v), mc[v]);
  }
  Poly q = exact_quotient(pn, Poly::monomial(p.ctx(), mc, Rat(1)));
  if (!q.is_constant()) {
    for (const auto& [part, mult] : squarefree_decomposition(q).factors) {
      for (const auto& h : factor_squarefree_multi(part, limits)) add(h, mult);
    }
  }
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
    return render(a.first) < render(b.first);
  });
  Factorization f;
  f.factors = std::move(acc);
  f.unit = p.leading_coeff() / expand(p.ctx(), Factorization{Rat(1), f.factors}).leading_coeff();
  return f;
}

std::vector<Rat> rational_roots_in(const Poly& p, std::size_t v) {
  if (p.is_zero()) throw InputError("rational_roots_in: zero polynomial");
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (i != v && p.involves(i)) throw InputError("rational_roots_in: polynomial is not univariate");
  }
  if (p.is_constant()) return {};
  Poly n = normalize(p);
  ZPoly u(static_cast<std::size_t>(n.degree_in(v)) + 1, Int(0));
  for (const auto& t : n.terms()) u[t.mono[v]] = t.coeff.get_num();
  return detail::rational_roots(u);
}

}  // namespace jacdiv
