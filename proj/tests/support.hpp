#pragma once

// Random generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "jacdiv/polymap.hpp"

namespace testing_support {

using jacdiv::Monomial;
using jacdiv::Poly;
using jacdiv::PolyMap;
using jacdiv::Rat;
using jacdiv::Term;
using jacdiv::VarCtx;

inline VarCtx ctx_n(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(names[i]);
  return VarCtx(std::move(v));
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline Poly random_poly(std::mt19937_64& rng, const VarCtx& ctx, int max_degree, int terms, int coeff = 9) {
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = uniform(rng, 0, max_degree);
    for (int k = 0; k < budget; ++k) {
      std::size_t v = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ctx.size()) - 1));
      m.set(v, m[v] + 1);
    }
    int c = 0;
    while (c == 0) c = uniform(rng, -coeff, coeff);
    out.push_back({m, Rat(c)});
  }
  return Poly::from_terms(ctx, std::move(out));
}

inline Poly random_nonconstant(std::mt19937_64& rng, const VarCtx& ctx, int max_degree, int terms) {
  while (true) {
    Poly p = random_poly(rng, ctx, max_degree, terms);
    if (!p.is_constant()) return p;
  }
}

/// x_i + p_i(x_{i+1}, ..., x_n) + c_i, then a random variable permutation.
inline PolyMap random_triangular(std::mt19937_64& rng, const VarCtx& ctx, int max_degree) {
  const std::size_t n = ctx.size();
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Poly c = Poly::variable(ctx, i) + Rat(uniform(rng, -3, 3));
    for (std::size_t j = i + 1; j < n; ++j) {
      int e = uniform(rng, 0, max_degree);
      if (e > 0) c += Rat(uniform(rng, -3, 3)) * pow(Poly::variable(ctx, j), static_cast<unsigned>(e));
    }
    comps.push_back(std::move(c));
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Poly> permuted;
  for (auto p : perm) permuted.push_back(comps[p]);
  return PolyMap(ctx, std::move(permuted));
}

/// Determinant of a rational matrix by Gaussian elimination.
inline Rat rational_det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Coefficients of p in variable 0 at a value of variable 1; p is bivariate.
inline std::vector<Rat> coeffs_at(const Poly& p, const Rat& y) {
  std::vector<Rat> c(static_cast<std::size_t>(p.degree_in(0) + 1));
  for (const auto& t : p.terms()) {
    Rat v = t.coeff;
    for (unsigned k = 0; k < t.mono[1]; ++k) v *= y;
    c[t.mono[0]] += v;
  }
  return c;
}

/// Res_x(p, q) as a polynomial in y: Sylvester determinants at sample
/// values of y, then Lagrange interpolation.
inline Poly sylvester_resultant(const Poly& p, const Poly& q, const VarCtx& ycx) {
  const std::size_t dp = static_cast<std::size_t>(p.degree_in(0));
  const std::size_t dq = static_cast<std::size_t>(q.degree_in(0));
  const std::size_t size = dp + dq;
  const int bound = (p.total_degree() + 1) * (q.total_degree() + 1) + 1;
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  for (int k = 0; k <= bound; ++k) {
    Rat y(k);
    auto a = coeffs_at(p, y);
    auto b = coeffs_at(q, y);
    std::vector<std::vector<Rat>> m(size, std::vector<Rat>(size));
    for (std::size_t r = 0; r < dq; ++r) {
      for (std::size_t i = 0; i <= dp; ++i) m[r][r + i] = a[dp - i];
    }
    for (std::size_t r = 0; r < dp; ++r) {
      for (std::size_t i = 0; i <= dq; ++i) m[dq + r][r + i] = b[dq - i];
    }
    xs.push_back(y);
    ys.push_back(rational_det(std::move(m)));
  }
  Poly y = Poly::variable(ycx, 0);
  Poly acc(ycx);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(ycx, ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= (y - xs[j]) * Rat(1 / (xs[i] - xs[j]));
    }
    acc += basis;
  }
  return acc;
}

}  // namespace testing_support
