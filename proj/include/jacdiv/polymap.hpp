#pragma once

#include <span>
#include <vector>

#include "jacdiv/poly.hpp"

namespace jacdiv {

/// A polynomial self-map of affine n-space: n components in n variables.
class PolyMap {
 public:
  PolyMap(VarCtx ctx, std::vector<Poly> components);

  const VarCtx& ctx() const { return ctx_; }
  std::size_t size() const { return components_.size(); }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Poly>& components() const { return components_; }

  static PolyMap identity(const VarCtx& ctx);

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  VarCtx ctx_;
  std::vector<Poly> components_;
};

/// Rectangular grid of polynomials sharing one context.
class PolyMatrix {
 public:
  PolyMatrix(VarCtx ctx, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarCtx& ctx() const { return ctx_; }
  Poly& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  VarCtx ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> cells_;
};

/// Entry (i, j) is the partial derivative of component i by variable j.
PolyMatrix jacobian_matrix(const PolyMap& map);

/// Cofactor expansion along the first row.
Poly determinant_cofactor(const PolyMatrix& m);
/// Fraction-free Gaussian elimination with exact divisions.
Poly determinant_bareiss(const PolyMatrix& m);
/// Cofactor expansion up to 3x3, Bareiss above.
Poly determinant(const PolyMatrix& m);

Poly jacobian_det(const PolyMap& map);

/// Context Y1..Yn for polynomials on the target space of `map`; names are
/// prefixed with extra underscores if they would clash with source names.
VarCtx image_ctx(const VarCtx& source);

/// Pullback H(f1, ..., fn). H must have exactly map.size() variables.
Poly compose(const Poly& h, const PolyMap& map);

/// Composition outer o inner (apply inner first).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Rational matrix of a polynomial matrix at a point, row-major.
std::vector<std::vector<Rat>> evaluate(const PolyMatrix& m, std::span<const Rat> point);

/// Image of a point.
std::vector<Rat> evaluate(const PolyMap& map, std::span<const Rat> point);

/// Rank of a rational matrix.
std::size_t rank(std::vector<std::vector<Rat>> m);

}  // namespace jacdiv
