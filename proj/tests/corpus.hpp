#pragma once

// Seeded map corpora: triangular automorphisms, and such automorphisms
// wrapped around one quadratic non-invertible step.

#include "support.hpp"

namespace testing_support {

inline PolyMap quadratic_step(std::mt19937_64& rng, const VarCtx& c) {
  const std::size_t n = c.size();
  auto v = [&](std::size_t i) { return Poly::variable(c, i); };
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(v(i));
  switch (uniform(rng, 0, 4)) {
    case 0:
      comps[0] = v(0) * v(0);
      break;
    case 1:
      comps[0] = v(0) * v(1);
      break;
    case 2:
      comps[0] = v(0) * v(0) + v(1);
      break;
    case 3:
      comps[1] = v(1) * v(1) + v(0);
      break;
    default:
      comps[0] = v(0) * v(1);
      comps[1] = v(1) * v(1);
      break;
  }
  return PolyMap(c, std::move(comps));
}

inline int map_degree_bound(const PolyMap& m) {
  int d = 0;
  for (const auto& c : m.components()) d = std::max(d, c.total_degree());
  return d;
}

/// T1 o Q o T2 with one of T1, T2 affine; total degree at most 4.
inline PolyMap quadratic_corpus_map(std::mt19937_64& rng, std::size_t n) {
  VarCtx c = ctx_n(n);
  while (true) {
    bool curved_inner = uniform(rng, 0, 1) == 1;
    PolyMap inner = random_triangular(rng, c, curved_inner ? 2 : 1);
    PolyMap outer = random_triangular(rng, c, curved_inner ? 1 : 2);
    PolyMap m = compose(outer, compose(quadratic_step(rng, c), inner));
    if (map_degree_bound(m) <= 4) return m;
  }
}

/// Composition of two triangular automorphisms; constant Jacobian.
inline PolyMap keller_corpus_map(std::mt19937_64& rng, std::size_t n) {
  VarCtx c = ctx_n(n);
  while (true) {
    PolyMap m = compose(random_triangular(rng, c, 2), random_triangular(rng, c, 1));
    if (map_degree_bound(m) <= 4) return m;
  }
}

}  // namespace testing_support
