#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jacdiv/groebner_engine.hpp"
#include "jacdiv/monomial_order.hpp"
#include "jacdiv/poly.hpp"
#include "jacdiv/polymap.hpp"

namespace jacdiv {

/// Ideal given by a nonempty list of nonzero generators in one context.
class Ideal {
 public:
  Ideal(VarCtx ctx, std::vector<Poly> generators);

  const VarCtx& ctx() const { return ctx_; }
  const std::vector<Poly>& generators() const { return generators_; }

 private:
  VarCtx ctx_;
  std::vector<Poly> generators_;
};

/// Reduced Groebner basis. Elements are monic under `order` and sorted by
/// increasing leading monomial; the zero ideal has an empty basis.
class GroebnerBasis {
 public:
  GroebnerBasis(VarCtx ctx, MonomialOrder order, std::vector<gb::GPoly<Rat>> basis);

  const VarCtx& ctx() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& basis() const { return basis_; }
  const std::vector<gb::GPoly<Rat>>& raw() const { return raw_; }
  std::vector<Monomial> leading_monomials() const;

  bool is_unit() const;
  bool is_zero_ideal() const { return basis_.empty(); }
  bool contains(const Poly& p) const;

 private:
  VarCtx ctx_;
  MonomialOrder order_;
  std::vector<gb::GPoly<Rat>> raw_;
  std::vector<Poly> basis_;
};

gb::GPoly<Rat> to_gpoly(const Poly& p, const MonomialOrder& ord);
Poly from_gpoly(const VarCtx& ctx, const gb::GPoly<Rat>& g);

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits = {});

/// Remainder of p modulo G; zero iff p lies in the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& g);

/// Basis of I intersected with the subring in the `keep` variables. The
/// result lives in a context of the kept names, in their original order,
/// under grevlex.
GroebnerBasis elimination_ideal(const Ideal& ideal, std::span<const std::size_t> keep,
                                const GroebnerLimits& limits = {});

/// Krull dimension: size of a largest variable subset containing the support
/// of no leading monomial. -1 for the unit ideal.
int ideal_dimension(const GroebnerBasis& g);

/// I : g^infinity, computed by eliminating t from I + <t*g - 1>.
GroebnerBasis saturate(const Ideal& ideal, const Poly& g, const GroebnerLimits& limits = {});

/// Number of standard monomials of a zero-dimensional ideal, that is the
/// dimension of the quotient ring. Nothing for positive-dimensional ideals.
std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis& g);

/// Basis of <Y_i - f_i> under a block order with the source variables first,
/// reused for repeated membership queries in K[f].
class PullbackBasis {
 public:
  explicit PullbackBasis(const PolyMap& map, const GroebnerLimits& limits = {});

  const VarCtx& image_ctx() const { return image_ctx_; }
  const GroebnerBasis& basis() const { return basis_; }

  /// H in the image variables with H(f) == p, or nothing if p is not in K[f].
  std::optional<Poly> membership(const Poly& p) const;

 private:
  std::size_t n_;
  VarCtx source_ctx_;
  VarCtx image_ctx_;
  VarCtx joint_ctx_;
  GroebnerBasis basis_;
};

std::optional<Poly> subalgebra_membership(const Poly& p, const PolyMap& map, const GroebnerLimits& limits = {});

namespace gb {

/// Elements of a block-order basis that involve only variables >= prefix.
template <class F>
std::vector<GPoly<F>> eliminate_prefix(std::vector<GPoly<F>> gens, std::size_t prefix, std::size_t n,
                                       const GroebnerLimits& limits) {
  auto ord = MonomialOrder::block(prefix, n);
  auto basis = groebner(std::move(gens), ord, limits);
  std::vector<GPoly<F>> kept;
  for (auto& b : basis) {
    bool inside = true;
    for (const auto& t : b) inside = inside && t.mono.supported_in(prefix, n);
    if (inside) kept.push_back(std::move(b));
  }
  return kept;
}

/// Moves every variable index up by `by`.
inline Monomial shift_up(const Monomial& m, std::size_t n, std::size_t by) {
  Monomial out;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] != 0) out.set(i + by, m[i]);
  }
  return out;
}

inline Monomial shift_down(const Monomial& m, std::size_t n, std::size_t by) {
  Monomial out;
  for (std::size_t i = by; i < n + by; ++i) {
    if (m[i] != 0) out.set(i - by, m[i]);
  }
  return out;
}

/// I : g^infinity in n variables over F, returned as a reduced basis under
/// grevlex. `one` is the unit of F.
template <class F>
std::vector<GPoly<F>> saturate(const std::vector<GPoly<F>>& gens, const GPoly<F>& g, std::size_t n, const F& one,
                               const GroebnerLimits& limits) {
  if (n + 1 > kMaxVars) throw CapacityError("saturation: too many variables");
  auto block = MonomialOrder::block(1, n + 1);
  std::vector<GPoly<F>> lifted;
  for (const auto& p : gens) {
    GPoly<F> q;
    for (const auto& t : p) q.push_back({shift_up(t.mono, n, 1), t.coeff});
    sort_terms(q, block);
    lifted.push_back(std::move(q));
  }
  GPoly<F> tg;
  for (const auto& t : g) tg.push_back({shift_up(t.mono, n, 1) * Monomial::variable(0), t.coeff});
  tg.push_back({Monomial{}, F(-one)});
  sort_terms(tg, block);
  lifted.push_back(std::move(tg));
  auto kept = eliminate_prefix(std::move(lifted), 1, n + 1, limits);
  auto grev = MonomialOrder::grevlex(n);
  std::vector<GPoly<F>> down;
  for (const auto& p : kept) {
    GPoly<F> q;
    for (const auto& t : p) q.push_back({shift_down(t.mono, n, 1), t.coeff});
    sort_terms(q, grev);
    down.push_back(std::move(q));
  }
  if (down.empty()) return down;
  return groebner(std::move(down), grev, limits);
}

}  // namespace gb
}  // namespace jacdiv
