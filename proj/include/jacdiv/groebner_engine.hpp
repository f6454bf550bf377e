#pragma once

// Buchberger's algorithm over an arbitrary exact coefficient field F.
// F is a field type with arithmetic operators and a free is_zero(const F&).
// Polynomials are term vectors kept in strictly descending order under
// a MonomialOrder.

#include <algorithm>
#include <string>
#include <vector>

#include "jacdiv/errors.hpp"
#include "jacdiv/monomial_order.hpp"
#include "jacdiv/poly.hpp"

namespace jacdiv {

struct GroebnerLimits {
  int max_degree = 40;
  std::size_t max_pairs = 20000;
  /// Re-check the Buchberger criterion on every returned basis.
  bool verify = true;
};

namespace gb {

template <class F>
struct GTerm {
  Monomial mono;
  F coeff;
};

template <class F>
using GPoly = std::vector<GTerm<F>>;

template <class F>
void sort_terms(GPoly<F>& p, const MonomialOrder& ord) {
  std::sort(p.begin(), p.end(), [&ord](const GTerm<F>& a, const GTerm<F>& b) { return ord.greater(a.mono, b.mono); });
  GPoly<F> out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      if (!out.empty() && is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && is_zero(out.back().coeff)) out.pop_back();
  p = std::move(out);
}

/// a[from_a:] - c * m * b[from_b:], merged in order.
template <class F>
GPoly<F> sub_mul(const GPoly<F>& a, std::size_t from_a, const F& c, const Monomial& m, const GPoly<F>& b,
                 std::size_t from_b, const MonomialOrder& ord) {
  GPoly<F> out;
  out.reserve(a.size() - from_a + b.size() - from_b);
  std::size_t i = from_a;
  std::size_t j = from_b;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    auto cmp = ord.compare(a[i].mono, bm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({bm, F(-(c * b[j].coeff))});
      ++j;
    } else {
      F v = a[i].coeff - c * b[j].coeff;
      if (!is_zero(v)) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, F(-(c * b[j].coeff))});
  return out;
}

template <class F>
void make_monic(GPoly<F>& p) {
  if (p.empty()) return;
  F lc = p.front().coeff;
  for (auto& t : p) t.coeff = t.coeff / lc;
}

/// Fully reduced remainder of p modulo the listed basis elements.
template <class F>
GPoly<F> normal_form(GPoly<F> p, const std::vector<GPoly<F>>& basis, const std::vector<std::size_t>& use,
                     const MonomialOrder& ord) {
  GPoly<F> rem;
  while (!p.empty()) {
    const GTerm<F>& lt = p.front();
    const GPoly<F>* reducer = nullptr;
    for (auto k : use) {
      if (basis[k].front().mono.divides(lt.mono)) {
        reducer = &basis[k];
        break;
      }
    }
    if (reducer == nullptr) {
      rem.push_back(lt);
      p.erase(p.begin());
      continue;
    }
    F c = lt.coeff / reducer->front().coeff;
    Monomial m = lt.mono / reducer->front().mono;
    p = sub_mul(p, 1, c, m, *reducer, 1, ord);
  }
  return rem;
}

template <class F>
GPoly<F> normal_form(GPoly<F> p, const std::vector<GPoly<F>>& basis, const MonomialOrder& ord) {
  std::vector<std::size_t> use(basis.size());
  for (std::size_t i = 0; i < use.size(); ++i) use[i] = i;
  return normal_form(std::move(p), basis, use, ord);
}

template <class F>
GPoly<F> s_polynomial(const GPoly<F>& f, const GPoly<F>& g, const MonomialOrder& ord) {
  Monomial l = lcm(f.front().mono, g.front().mono);
  Monomial mf = l / f.front().mono;
  Monomial mg = l / g.front().mono;
  // lc(g) * (l / lt f) * f - lc(f) * (l / lt g) * g; leading terms cancel.
  GPoly<F> sf;
  sf.reserve(f.size());
  for (std::size_t i = 1; i < f.size(); ++i) sf.push_back({f[i].mono * mf, F(g.front().coeff * f[i].coeff)});
  return sub_mul(sf, 0, F(f.front().coeff), mg, g, 1, ord);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

inline bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

template <class F>
class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, const GroebnerLimits& limits) : ord_(ord), limits_(limits) {}

  std::vector<GPoly<F>> run(std::vector<GPoly<F>> gens) {
    for (auto& g : gens) {
      if (g.empty()) continue;
      GPoly<F> h = normal_form(std::move(g), polys_, alive_indices(), ord_);
      if (h.empty()) continue;
      if (add(std::move(h))) return unit_basis();
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > limits_.max_pairs) {
        throw CapacityError("Groebner basis: more than " + std::to_string(limits_.max_pairs) + " S-pairs");
      }
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        auto c = ord_.compare(a.lcm, b.lcm);
        if (c != 0) return c == std::strong_ordering::less;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      Pair p = *best;
      pairs_.erase(best);
      GPoly<F> s = s_polynomial(polys_[p.i], polys_[p.j], ord_);
      GPoly<F> h = normal_form(std::move(s), polys_, alive_indices(), ord_);
      if (h.empty()) continue;
      if (add(std::move(h))) return unit_basis();
    }
    return reduce_basis();
  }

 private:
  std::vector<std::size_t> alive_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (alive_[k]) out.push_back(k);
    }
    return out;
  }

  std::vector<GPoly<F>> unit_basis() const {
    GPoly<F> one = unit_;
    make_monic(one);
    return {one};
  }

  // Inserts h with the Gebauer-Moeller pair update. Returns true if h is a
  // nonzero constant.
  bool add(GPoly<F> h) {
    make_monic(h);
    const Monomial lt = h.front().mono;
    if (lt.is_one()) {
      unit_ = std::move(h);
      return true;
    }
    if (static_cast<int>(lt.degree()) > limits_.max_degree) {
      throw CapacityError("Groebner basis: element of degree " + std::to_string(lt.degree()) + " exceeds limit " +
                          std::to_string(limits_.max_degree));
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    alive_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (alive_[k]) candidates.push_back({k, hi, lcm(polys_[k].front().mono, lt)});
    }
    // Gebauer-Moeller on the new pairs: drop a pair whose lcm is a proper
    // multiple of another new lcm; among equal lcms keep one, or none if any
    // of them has coprime leading monomials.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& pa = candidates[a];
      bool drop = false;
      for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
        const Pair& pb = candidates[b];
        if (b == a) continue;
        if (pb.lcm != pa.lcm) {
          drop = pb.lcm.divides(pa.lcm);
        } else {
          drop = b < a || coprime(polys_[pb.i].front().mono, lt);
        }
      }
      if (!drop && coprime(polys_[pa.i].front().mono, lt)) drop = true;
      if (!drop) fresh.push_back(pa);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    for (const auto& p : pairs_) {
      bool redundant = lt.divides(p.lcm) && lcm(polys_[p.i].front().mono, lt) != p.lcm &&
                       lcm(polys_[p.j].front().mono, lt) != p.lcm;
      if (!redundant) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
    for (std::size_t k = 0; k < hi; ++k) {
      if (alive_[k] && lt.divides(polys_[k].front().mono)) alive_[k] = false;
    }
    return false;
  }

  std::vector<GPoly<F>> reduce_basis() const {
    std::vector<GPoly<F>> g;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (alive_[k]) g.push_back(polys_[k]);
    }
    // Drop elements whose leading monomial another element divides.
    std::vector<GPoly<F>> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
        if (a == b) continue;
        const Monomial& la = g[a].front().mono;
        const Monomial& lb = g[b].front().mono;
        if (lb.divides(la) && (lb != la || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[a]);
    }
    std::vector<GPoly<F>> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<GPoly<F>> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b != a) others.push_back(minimal[b]);
      }
      GPoly<F> head{minimal[a].front()};
      GPoly<F> tail(minimal[a].begin() + 1, minimal[a].end());
      GPoly<F> r = normal_form(std::move(tail), others, ord_);
      head.insert(head.end(), r.begin(), r.end());
      make_monic(head);
      reduced.push_back(std::move(head));
    }
    std::sort(reduced.begin(), reduced.end(), [this](const GPoly<F>& a, const GPoly<F>& b) {
      return ord_.greater(b.front().mono, a.front().mono);
    });
    return reduced;
  }

  MonomialOrder ord_;
  GroebnerLimits limits_;
  std::vector<GPoly<F>> polys_;
  std::vector<bool> alive_;
  std::vector<Pair> pairs_;
  GPoly<F> unit_;
};

/// Reduced Groebner basis with monic elements sorted by increasing leading
/// monomial. The unit ideal yields {1}; the zero ideal yields {}.
template <class F>
std::vector<GPoly<F>> groebner(std::vector<GPoly<F>> gens, const MonomialOrder& ord, const GroebnerLimits& limits) {
  Buchberger<F> engine(ord, limits);
  auto basis = engine.run(std::move(gens));
  if (limits.verify) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        if (coprime(basis[a].front().mono, basis[b].front().mono)) continue;
        if (!normal_form(s_polynomial(basis[a], basis[b], ord), basis, ord).empty()) {
          throw InvariantViolation("Groebner basis: S-polynomial does not reduce to zero");
        }
      }
    }
  }
  return basis;
}

/// True iff every S-polynomial of the basis reduces to zero.
template <class F>
bool satisfies_buchberger_criterion(const std::vector<GPoly<F>>& basis, const MonomialOrder& ord) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!normal_form(s_polynomial(basis[a], basis[b], ord), basis, ord).empty()) return false;
    }
  }
  return true;
}

}  // namespace gb
}  // namespace jacdiv
