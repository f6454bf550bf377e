#pragma once

#include <optional>
#include <vector>

#include "jacdiv/geometry.hpp"
#include "jacdiv/groebner.hpp"
#include "jacdiv/polymap.hpp"
#include "jacdiv/ratfunc.hpp"

namespace jacdiv {

/// Common zero-dimensional fiber count at `trials` random points where the
/// Jacobian does not vanish. Disagreeing counts raise InvariantViolation.
unsigned map_degree(const PolyMap& map, const GeometryOptions& options = {}, unsigned trials = 3);

/// s irreducible with tau(s) = -s; S(f) = s^2 and Jacobian = scale * s.
struct AntiInvariant {
  Poly s;
  Poly S;
  Rat scale;
};

/// Requires degree two and no contracted divisors.
AntiInvariant anti_invariant(const PolyMap& map, const GeometryOptions& options = {});

/// The deck transformation of a degree-two map as reduced rational functions.
struct Involution {
  std::vector<RatFunc> components;
  bool preserves_map = false;
  bool is_involutive = false;
  /// tau(J) = -J for the normalized Jacobian determinant.
  bool negates_jacobian = false;
};

/// Recovers the second point of the generic fiber over Q(a). Throws
/// InvariantViolation when the recovered map fails either identity.
Involution involution(const PolyMap& map, const GeometryOptions& options = {});

/// Substitutes theta into a rational function of the source variables.
RatFunc apply(const Involution& theta, const RatFunc& r);

bool verify_anti_invariance(const Involution& theta, const Poly& s);

/// Every reduced denominator of theta lies in K[f].
bool denominator_check(const Involution& theta, const PolyMap& map, const GroebnerLimits& limits = {});

/// phi_0 = phi and phi_j with component j replaced by s.
struct AuxiliaryMaps {
  std::vector<PolyMap> maps;
  std::vector<Poly> determinants;
};

AuxiliaryMaps auxiliary_maps(const PolyMap& map, const Poly& s);

/// The Jacobian determinants of the auxiliary maps have constant gcd.
bool auxiliary_gcd_check(const PolyMap& map, const Poly& s);

/// Anti-invariant built from a non-invariant h: h - tau(h) with its K[f]
/// denominator cleared and square factors from K[f] removed. Normalized.
Poly semiinvariant_from_generator(const PolyMap& map, const Involution& theta, const Poly& h,
                                  const GeometryOptions& options = {});

}  // namespace jacdiv
