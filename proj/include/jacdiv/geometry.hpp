#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jacdiv/factor.hpp"
#include "jacdiv/groebner.hpp"
#include "jacdiv/polymap.hpp"

namespace jacdiv {

/// Knobs shared by the sampling-based and Groebner-based routines.
struct GeometryOptions {
  GroebnerLimits groebner{};
  FactorLimits factor{};
  std::uint64_t seed = 20240611;
  /// Random coordinates are drawn from [-bound, bound].
  int bound = 1000;
  /// Points sampled by the rank cross-check.
  unsigned rank_trials = 4;
  /// Attempts allowed before a sampler gives up.
  unsigned retry_cap = 64;
};

using Point = std::vector<Rat>;

/// Uniform integer point in [-bound, bound]^n.
Point random_point(std::mt19937_64& rng, std::size_t n, int bound);

enum class DivisorClass { Contracted, Branching };

/// Verified when the factor has degree one in some variable, which makes it
/// irreducible over every field extension.
enum class IrreducibilityFlag { Verified, Unverified };

std::string to_string(DivisorClass c);
std::string to_string(IrreducibilityFlag f);

struct DivisorReport {
  Poly factor;
  unsigned multiplicity = 1;
  DivisorClass divisor_class = DivisorClass::Branching;
  /// Present iff the divisor is not contracted; lives in the image context.
  std::optional<Poly> image_polynomial;
  /// Contracted evidence: coprime H1, H2 whose pullbacks h divides.
  std::optional<std::pair<Poly, Poly>> witness;
  /// Branching evidence: pullback of the image polynomial divided by h^2.
  std::optional<Poly> branching_quotient;
  /// Conormal criterion result; set for non-contracted divisors.
  std::optional<bool> conormal;
  IrreducibilityFlag irreducibility = IrreducibilityFlag::Unverified;
};

bool is_dominant(const PolyMap& map);

/// True iff the factor has degree exactly one in some variable.
bool has_linear_variable(const Poly& h);

/// Ideal of the closure of map(V(h)), in the image context.
GroebnerBasis image_closure(const Poly& h, const PolyMap& map, const GroebnerLimits& limits = {});

/// Dimension of the image of V(h) is below n - 1. h must be irreducible.
bool is_contracted(const Poly& h, const PolyMap& map, const GroebnerLimits& limits = {});

/// Samples smooth points of V(h) and reports whether the differential has
/// rank below n - 1 on their tangent spaces at every sample. Throws
/// CapacityError if no smooth point is found within the retry cap.
bool contracted_rank_check(const Poly& h, const PolyMap& map, const GeometryOptions& options = {});

/// Normalized generator of the principal image ideal of V(h).
Poly image_polynomial(const Poly& h, const PolyMap& map, const GroebnerLimits& limits = {});

/// h^2 divides the pullback of the image polynomial.
bool is_branching(const Poly& h, const PolyMap& map, const GroebnerLimits& limits = {});

/// Every entry of grad(H)(f) * J(f) is divisible by h.
bool conormal_check(const Poly& h, const PolyMap& map, const GroebnerLimits& limits = {});

/// Coprime irreducible members of the image ideal of a contracted V(h).
std::pair<Poly, Poly> contracted_witness(const Poly& h, const PolyMap& map, const GeometryOptions& options = {});

/// One report per irreducible factor of the Jacobian determinant, ordered as
/// the factorization. Empty for Keller maps.
std::vector<DivisorReport> classify_jacobian_divisors(const PolyMap& map, const GeometryOptions& options = {});

struct FiberResult {
  bool finite = true;
  /// Quotient-ring dimension, counting multiplicity. Set when finite.
  std::uint64_t count = 0;
  /// Dimension of the fiber. Set when infinite.
  int dimension = 0;
  /// All rational points of a finite fiber.
  std::vector<Point> solutions;
};

FiberResult fiber(const PolyMap& map, std::span<const Rat> target, const GroebnerLimits& limits = {});

/// Ideal of Z in 2n variables: first copies suffixed "1", then "2".
struct FiberProductIdeal {
  VarCtx ctx;
  std::vector<Poly> generators;
  std::vector<Poly> diagonal;
};

FiberProductIdeal fiber_product_ideal(const PolyMap& map);

/// Z saturated by a random linear form in the differences x1 - x2; removes
/// the diagonal and keeps the involution graph with the residual part.
GroebnerBasis off_diagonal_part(const FiberProductIdeal& z, const GeometryOptions& options = {});

struct KellerReport {
  std::size_t squarefree_checked = 0;
  std::size_t coprime_checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Pullbacks of square-free samples stay square-free and pullbacks of
/// coprime pairs stay coprime. Samples violating their own hypothesis are
/// skipped. Throws InputError unless the Jacobian is a nonzero constant.
KellerReport keller_checks(const PolyMap& map, std::span<const Poly> squarefree_samples,
                           std::span<const std::pair<Poly, Poly>> coprime_pairs);

}  // namespace jacdiv
