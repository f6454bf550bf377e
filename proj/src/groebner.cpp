#include "jacdiv/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "jacdiv/errors.hpp"

namespace jacdiv {

Ideal::Ideal(VarCtx ctx, std::vector<Poly> generators) : ctx_(std::move(ctx)), generators_(std::move(generators)) {
  if (generators_.empty()) throw InputError("ideal needs at least one generator");
  for (const auto& g : generators_) {
    require_same_ctx(g.ctx(), ctx_, "Ideal");
    if (g.is_zero()) throw InputError("ideal generators must be nonzero");
  }
}

gb::GPoly<Rat> to_gpoly(const Poly& p, const MonomialOrder& ord) {
  gb::GPoly<Rat> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, t.coeff});
  gb::sort_terms(out, ord);
  return out;
}

Poly from_gpoly(const VarCtx& ctx, const gb::GPoly<Rat>& g) {
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g) terms.push_back({t.mono, t.coeff});
  return Poly::from_terms(ctx, std::move(terms));
}

GroebnerBasis::GroebnerBasis(VarCtx ctx, MonomialOrder order, std::vector<gb::GPoly<Rat>> basis)
    : ctx_(std::move(ctx)), order_(order), raw_(std::move(basis)) {
  for (const auto& b : raw_) basis_.push_back(from_gpoly(ctx_, b));
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& b : raw_) out.push_back(b.front().mono);
  return out;
}

bool GroebnerBasis::is_unit() const { return raw_.size() == 1 && raw_.front().front().mono.is_one(); }

bool GroebnerBasis::contains(const Poly& p) const { return normal_form(p, *this).is_zero(); }

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits) {
  if (order.nvars() != ideal.ctx().size()) throw InputError("monomial order and ideal disagree on variable count");
  std::vector<gb::GPoly<Rat>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_gpoly(g, order));
  return GroebnerBasis(ideal.ctx(), order, gb::groebner(std::move(gens), order, limits));
}

Poly normal_form(const Poly& p, const GroebnerBasis& g) {
  require_same_ctx(p.ctx(), g.ctx(), "normal_form");
  return from_gpoly(g.ctx(), gb::normal_form(to_gpoly(p, g.order()), g.raw(), g.order()));
}

GroebnerBasis elimination_ideal(const Ideal& ideal, std::span<const std::size_t> keep, const GroebnerLimits& limits) {
  const std::size_t n = ideal.ctx().size();
  std::vector<bool> kept(n, false);
  for (auto k : keep) {
    if (k >= n) throw InputError("elimination_ideal: variable index out of range");
    kept[k] = true;
  }
  std::vector<std::size_t> drop;
  std::vector<std::size_t> stay;
  for (std::size_t i = 0; i < n; ++i) (kept[i] ? stay : drop).push_back(i);
  if (stay.empty() || drop.empty()) throw InputError("elimination_ideal: keep must be a nonempty proper subset");

  // Eliminated variables move to the front of a working context.
  std::vector<std::string> names;
  std::vector<std::size_t> to_work(n);
  for (auto i : drop) {
    to_work[i] = names.size();
    names.push_back(ideal.ctx().name(i));
  }
  for (auto i : stay) {
    to_work[i] = names.size();
    names.push_back(ideal.ctx().name(i));
  }
  VarCtx work(std::move(names));
  auto block = MonomialOrder::block(drop.size(), n);
  std::vector<gb::GPoly<Rat>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_gpoly(remap(g, work, to_work), block));
  auto inside = gb::eliminate_prefix(std::move(gens), drop.size(), n, limits);

  std::vector<std::string> kept_names;
  for (auto i : stay) kept_names.push_back(ideal.ctx().name(i));
  VarCtx out_ctx(std::move(kept_names));
  auto grev = MonomialOrder::grevlex(stay.size());
  std::vector<gb::GPoly<Rat>> down;
  for (const auto& p : inside) {
    gb::GPoly<Rat> q;
    for (const auto& t : p) q.push_back({gb::shift_down(t.mono, stay.size(), drop.size()), t.coeff});
    gb::sort_terms(q, grev);
    down.push_back(std::move(q));
  }
  if (!down.empty()) down = gb::groebner(std::move(down), grev, limits);
  return GroebnerBasis(out_ctx, grev, std::move(down));
}

int ideal_dimension(const GroebnerBasis& g) {
  if (g.is_unit()) return -1;
  const std::size_t n = g.ctx().size();
  if (n > 20) throw CapacityError("ideal_dimension: too many variables for subset search");
  auto leads = g.leading_monomials();
  std::vector<std::uint32_t> supports;
  for (const auto& m : leads) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [subset](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

GroebnerBasis saturate(const Ideal& ideal, const Poly& g, const GroebnerLimits& limits) {
  require_same_ctx(g.ctx(), ideal.ctx(), "saturate");
  if (g.is_zero()) throw InputError("saturate: g must be nonzero");
  const std::size_t n = ideal.ctx().size();
  auto grev = MonomialOrder::grevlex(n);
  std::vector<gb::GPoly<Rat>> gens;
  for (const auto& p : ideal.generators()) gens.push_back(to_gpoly(p, grev));
  auto basis = gb::saturate(gens, to_gpoly(g, grev), n, Rat(1), limits);
  return GroebnerBasis(ideal.ctx(), grev, std::move(basis));
}

std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis& g) {
  if (g.is_unit()) return 0;
  const std::size_t n = g.ctx().size();
  auto leads = g.leading_monomials();
  // Zero-dimensional iff every variable has a pure power among the leads.
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : leads) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0 && m.degree() == m[i]) bound[i] = bound[i] == 0 ? m[i] : std::min(bound[i], m[i]);
    }
  }
  if (std::any_of(bound.begin(), bound.end(), [](unsigned b) { return b == 0; })) return std::nullopt;
  std::uint64_t count = 0;
  Monomial cur;
  // Odometer over the box below the pure powers.
  while (true) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&cur](const Monomial& m) { return m.divides(cur); });
    if (standard) ++count;
    std::size_t i = 0;
    while (i < n) {
      if (cur[i] + 1 < bound[i]) {
        cur.set(i, cur[i] + 1);
        break;
      }
      cur.set(i, 0);
      ++i;
    }
    if (i == n) break;
  }
  return count;
}

PullbackBasis::PullbackBasis(const PolyMap& map, const GroebnerLimits& limits)
    : n_(map.size()),
      source_ctx_(map.ctx()),
      image_ctx_(jacdiv::image_ctx(map.ctx())),
      joint_ctx_([&] {
        auto names = map.ctx().names();
        for (const auto& y : image_ctx_.names()) names.push_back(y);
        return VarCtx(std::move(names));
      }()),
      basis_([&] {
        if (2 * n_ > kMaxVars) throw CapacityError("subalgebra membership: too many variables");
        std::vector<std::size_t> to_joint(n_);
        std::iota(to_joint.begin(), to_joint.end(), 0);
        std::vector<Poly> gens;
        for (std::size_t i = 0; i < n_; ++i) {
          gens.push_back(Poly::variable(joint_ctx_, n_ + i) - remap(map[i], joint_ctx_, to_joint));
        }
        return buchberger(Ideal(joint_ctx_, std::move(gens)), MonomialOrder::block(n_, 2 * n_), limits);
      }()) {}

std::optional<Poly> PullbackBasis::membership(const Poly& p) const {
  require_same_ctx(p.ctx(), source_ctx_, "subalgebra_membership");
  std::vector<std::size_t> to_joint(n_);
  std::iota(to_joint.begin(), to_joint.end(), 0);
  Poly r = normal_form(remap(p, joint_ctx_, to_joint), basis_);
  std::vector<Term> terms;
  for (const auto& t : r.terms()) {
    if (!t.mono.supported_in(n_, 2 * n_)) return std::nullopt;
    terms.push_back({gb::shift_down(t.mono, n_, n_), t.coeff});
  }
  return Poly::from_terms(image_ctx_, std::move(terms));
}

std::optional<Poly> subalgebra_membership(const Poly& p, const PolyMap& map, const GroebnerLimits& limits) {
  return PullbackBasis(map, limits).membership(p);
}

}  // namespace jacdiv
