#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jacdiv/rational.hpp"

namespace jacdiv {

/// Upper bound on the number of variables in any context. Elimination and
/// saturation adjoin variables, so this is larger than the map sizes the
/// library is meant for.
inline constexpr std::size_t kMaxVars = 24;

/// An ordered list of distinct variable names. Copies share storage; two
/// contexts are equal when their name lists are equal.
class VarCtx {
 public:
  VarCtx();
  explicit VarCtx(std::vector<std::string> names);
  VarCtx(std::initializer_list<std::string> names) : VarCtx(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarCtx& a, const VarCtx& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector. Entries past the context size stay zero, so the
/// defaulted comparison is lexicographic with x1 > x2 > ... .
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { exps_.fill(0); }
  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned value);
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  /// Only variables in [lo, hi) can be nonzero.
  bool supported_in(std::size_t lo, std::size_t hi) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVars> exps_;
};

/// Graded lexicographic comparison; the canonical order for stored terms
/// and rendered output.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rat coeff;
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// strictly descending graded-lex order with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarCtx ctx) : ctx_(std::move(ctx)) {}

  static Poly constant(VarCtx ctx, const Rat& c);
  static Poly variable(VarCtx ctx, std::size_t i);
  static Poly monomial(VarCtx ctx, const Monomial& m, const Rat& c);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Poly from_terms(VarCtx ctx, std::vector<Term> terms);

  const VarCtx& ctx() const { return ctx_; }
  std::size_t nvars() const { return ctx_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; requires is_constant().
  Rat constant_value() const;
  Rat constant_term() const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in variable i; -1 for the zero polynomial.
  int degree_in(std::size_t i) const;
  bool involves(std::size_t i) const { return degree_in(i) > 0; }

  /// Leading term under graded-lex. Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Rat& leading_coeff() const { return terms_.front().coeff; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator+(Poly a, const Rat& c) { return a += constant(a.ctx(), c); }
  friend Poly operator-(Poly a, const Rat& c) { return a -= constant(a.ctx(), c); }

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  VarCtx ctx_;
  std::vector<Term> terms_;
};

/// Raises p to a nonnegative power by repeated squaring.
Poly pow(const Poly& p, unsigned e);

/// Formal partial derivative with respect to variable j.
Poly partial(const Poly& p, std::size_t j);

/// Exact value at a rational point; point.size() must equal the context size.
Rat evaluate(const Poly& p, std::span<const Rat> point);

/// Substitutes a value for variable j, keeping the context.
Poly substitute(const Poly& p, std::size_t j, const Rat& value);

/// Moves p into `target`, sending variable i of p's context to variable
/// index_map[i] of the target.
Poly remap(const Poly& p, const VarCtx& target, std::span<const std::size_t> index_map);

/// Remaps by variable name; every variable of p must exist in `target`.
Poly remap_by_name(const Poly& p, const VarCtx& target);

/// Positive rational c such that p / c has coprime integer coefficients.
Rat content(const Poly& p);

/// Primitive integer form with positive leading coefficient under
/// graded-lex. Zero stays zero.
Poly normalize(const Poly& p);

/// Writes the polynomial with terms in descending graded-lex order, explicit
/// `*` products and `^` powers, e.g. `2*x*w^2 - z^2`.
std::string render(const Poly& p);

/// Throws InputError unless the contexts match.
void require_same_ctx(const VarCtx& a, const VarCtx& b, const char* what);

}  // namespace jacdiv
