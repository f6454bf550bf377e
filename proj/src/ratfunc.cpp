#include "jacdiv/ratfunc.hpp"

#include <algorithm>

#include "jacdiv/errors.hpp"
#include "jacdiv/gcd.hpp"

namespace jacdiv {

namespace {

Poly one_like(const Poly& p) { return Poly::constant(p.ctx(), Rat(1)); }

}  // namespace

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(one_like(num_)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_ctx(num_.ctx(), den_.ctx(), "RatFunc");
  if (den_.is_zero()) throw InputError("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = one_like(num_);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  Poly nd = normalize(den_);
  Rat scale = den_.leading_coeff() / nd.leading_coeff();
  if (scale != 1) num_ *= Rat(1 / scale);
  den_ = std::move(nd);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) {
      RatFunc r;
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
      return r;
    }
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  Poly g = gcd(a.den_, b.den_);
  Poly ca = exact_quotient(b.den_, g);
  Poly cb = exact_quotient(a.den_, g);
  return RatFunc(a.num_ * ca + b.num_ * cb, a.den_ * ca);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.den_.is_constant() && b.den_.is_constant()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    return r;
  }
  // Cross-cancel so the product is already reduced.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  RatFunc r;
  r.num_ = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
  r.den_ = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
  Poly nd = normalize(r.den_);
  Rat scale = r.den_.leading_coeff() / nd.leading_coeff();
  if (scale != 1) r.num_ *= Rat(1 / scale);
  r.den_ = std::move(nd);
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw InputError("RatFunc: division by zero");
  RatFunc inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  Poly nd = normalize(inv.den_);
  Rat scale = inv.den_.leading_coeff() / nd.leading_coeff();
  if (scale != 1) inv.num_ *= Rat(1 / scale);
  inv.den_ = std::move(nd);
  return a * inv;
}

namespace {

std::string render_part(const Poly& p) {
  std::string s = render(p);
  return p.size() > 1 ? "(" + s + ")" : s;
}

// Division binds left to right, so any product below the bar is grouped.
std::string render_den(const Poly& p) {
  std::string s = render(p);
  return s.find_first_of("+-*/ ") != std::string::npos ? "(" + s + ")" : s;
}

}  // namespace

std::string render(const RatFunc& r) {
  if (r.den().is_constant()) return render(r.num());
  return render_part(r.num()) + "/" + render_den(r.den());
}

RatFunc compose(const Poly& p, std::span<const RatFunc> values) {
  if (values.size() != p.nvars()) throw InputError("compose: arity mismatch");
  if (values.empty()) return RatFunc::constant(VarCtx(), p.constant_term());
  const VarCtx& target = values.front().ctx();
  for (const auto& v : values) require_same_ctx(v.ctx(), target, "compose");
  if (p.is_zero()) return RatFunc(Poly(target));

  // Common denominator prod(den_i^deg_i); one reduction at the end.
  const std::size_t n = p.nvars();
  std::vector<unsigned> degs(n, 0);
  for (std::size_t i = 0; i < n; ++i) degs[i] = static_cast<unsigned>(std::max(p.degree_in(i), 0));
  std::vector<std::vector<Poly>> num_pow(n);
  std::vector<std::vector<Poly>> den_pow(n);
  for (std::size_t i = 0; i < n; ++i) {
    num_pow[i].push_back(Poly::constant(target, Rat(1)));
    den_pow[i].push_back(Poly::constant(target, Rat(1)));
    for (unsigned e = 1; e <= degs[i]; ++e) {
      num_pow[i].push_back(num_pow[i].back() * values[i].num());
      den_pow[i].push_back(values[i].den().is_constant() ? den_pow[i].back()
                                                          : den_pow[i].back() * values[i].den());
    }
  }
  Poly num(target);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = t.mono[i];
      if (e > 0) term *= num_pow[i][e];
      if (degs[i] > e && !values[i].den().is_constant()) term *= den_pow[i][degs[i] - e];
    }
    num += term;
  }
  Poly den = Poly::constant(target, Rat(1));
  for (std::size_t i = 0; i < n; ++i) {
    if (!values[i].den().is_constant()) den *= den_pow[i][degs[i]];
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc compose(const RatFunc& r, std::span<const RatFunc> values) {
  return compose(r.num(), values) / compose(r.den(), values);
}

}  // namespace jacdiv
