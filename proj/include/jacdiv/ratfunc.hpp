#pragma once

#include <span>
#include <string>

#include "jacdiv/poly.hpp"

namespace jacdiv {

/// Reduced quotient of polynomials. The denominator is primitive with a
/// positive graded-lex leading coefficient, so equal functions have equal
/// representations.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(VarCtx ctx, const Rat& c) { return RatFunc(Poly::constant(std::move(ctx), c)); }

  const VarCtx& ctx() const { return num_.ctx(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void reduce();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

/// `num` when the denominator is 1, else `(num)/(den)`; single-term parts
/// are not parenthesized.
std::string render(const RatFunc& r);

/// Substitutes values[i] for variable i of p. The values share one context.
RatFunc compose(const Poly& p, std::span<const RatFunc> values);
RatFunc compose(const RatFunc& r, std::span<const RatFunc> values);

}  // namespace jacdiv
