#include "jacdiv/polymap.hpp"

#include "jacdiv/errors.hpp"
#include "jacdiv/gcd.hpp"

namespace jacdiv {

PolyMap::PolyMap(VarCtx ctx, std::vector<Poly> components)
    : ctx_(std::move(ctx)), components_(std::move(components)) {
  if (components_.size() != ctx_.size()) {
    throw InputError("map has " + std::to_string(components_.size()) + " components but " +
                     std::to_string(ctx_.size()) + " variables");
  }
  for (const auto& c : components_) require_same_ctx(c.ctx(), ctx_, "PolyMap");
}

PolyMap PolyMap::identity(const VarCtx& ctx) {
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < ctx.size(); ++i) comps.push_back(Poly::variable(ctx, i));
  return PolyMap(ctx, std::move(comps));
}

PolyMatrix::PolyMatrix(VarCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), cells_(rows * cols, Poly(ctx_)) {}

PolyMatrix jacobian_matrix(const PolyMap& map) {
  const std::size_t n = map.size();
  PolyMatrix m(map.ctx(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = partial(map[i], j);
  }
  return m;
}

namespace {

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
}

Poly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 0) return Poly::constant(m.ctx(), Rat(1));
  if (k == 1) return m(row, cols[0]);
  Poly acc(m.ctx());
  for (std::size_t i = 0; i < k; ++i) {
    const Poly& entry = m(row, cols[i]);
    if (entry.is_zero()) continue;
    std::size_t c = cols[i];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
    Poly minor = cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
    if (i % 2 == 0) {
      acc += entry * minor;
    } else {
      acc -= entry * minor;
    }
  }
  return acc;
}

}  // namespace

Poly determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_rec(m, cols, 0);
}

Poly determinant_bareiss(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.ctx(), Rat(1));
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  Poly prev = Poly::constant(m.ctx(), Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly(m.ctx());
      std::swap(a[k], a[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_quotient(v, prev);
      }
      a[i][k] = Poly(m.ctx());
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Poly determinant(const PolyMatrix& m) {
  return m.rows() <= 3 ? determinant_cofactor(m) : determinant_bareiss(m);
}

Poly jacobian_det(const PolyMap& map) { return determinant(jacobian_matrix(map)); }

VarCtx image_ctx(const VarCtx& source) {
  std::string prefix = "Y";
  while (true) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 0; i < source.size(); ++i) {
      names.push_back(prefix + std::to_string(i + 1));
      if (source.index_of(names.back())) clash = true;
    }
    if (!clash) return VarCtx(std::move(names));
    prefix += "_";
  }
}

Poly compose(const Poly& h, const PolyMap& map) {
  if (h.nvars() != map.size()) {
    throw InputError("compose: polynomial has " + std::to_string(h.nvars()) + " variables, map has " +
                     std::to_string(map.size()) + " components");
  }
  const std::size_t n = map.size();
  std::vector<std::vector<Poly>> powers(n);
  Poly acc(map.ctx());
  for (const auto& t : h.terms()) {
    Poly term = Poly::constant(map.ctx(), t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(map.ctx(), Rat(1)));
      while (pw.size() <= e) pw.push_back(pw.back() * map[i]);
      term *= pw[e];
    }
    acc += term;
  }
  return acc;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.size() != inner.size()) throw InputError("compose: map sizes differ");
  // Variables of outer are matched positionally to components of inner.
  std::vector<Poly> comps;
  for (const auto& c : outer.components()) comps.push_back(compose(c, inner));
  return PolyMap(inner.ctx(), std::move(comps));
}

std::vector<std::vector<Rat>> evaluate(const PolyMatrix& m, std::span<const Rat> point) {
  std::vector<std::vector<Rat>> out(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m(i, j), point);
  }
  return out;
}

std::vector<Rat> evaluate(const PolyMap& map, std::span<const Rat> point) {
  std::vector<Rat> out;
  for (const auto& c : map.components()) out.push_back(evaluate(c, point));
  return out;
}

std::size_t rank(std::vector<std::vector<Rat>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace jacdiv
