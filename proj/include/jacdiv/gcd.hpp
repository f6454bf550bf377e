#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jacdiv/poly.hpp"

namespace jacdiv {

/// p = unit * prod(factor_i ^ multiplicity_i), each factor normalized.
struct Factorization {
  Rat unit{1};
  std::vector<std::pair<Poly, unsigned>> factors;
};

/// Rebuilds the polynomial a factorization describes.
Poly expand(const VarCtx& ctx, const Factorization& f);

/// Returns q with b == a * q, or nothing if a does not divide b.
/// Throws InputError if a is zero.
std::optional<Poly> divides(const Poly& a, const Poly& b);

/// Exact quotient b / a; throws InvariantViolation if the division leaves a
/// remainder.
Poly exact_quotient(const Poly& b, const Poly& a);

/// Normalized greatest common divisor. Throws InputError if both are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Coefficients of p viewed as a polynomial in variable v; entry k is the
/// coefficient of v^k and does not involve v.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t v);

/// Normalized gcd of the coefficients of p with respect to v.
Poly content_in(const Poly& p, std::size_t v);

/// Square-free decomposition: factors pairwise coprime and square-free,
/// multiplicities strictly increasing. Throws InputError on constants.
Factorization squarefree_decomposition(const Poly& p);

bool is_squarefree(const Poly& p);

}  // namespace jacdiv
