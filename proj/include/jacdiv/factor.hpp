#pragma once

#include <vector>

#include "jacdiv/gcd.hpp"
#include "jacdiv/poly.hpp"

namespace jacdiv {

/// Size bounds for multivariate factorization. Inputs beyond them raise
/// CapacityError rather than running unbounded.
struct FactorLimits {
  int max_total_degree = 12;
  std::size_t max_variables = 5;
  /// Largest univariate degree produced by Kronecker substitution.
  int max_kronecker_degree = 1200;
  /// Largest number of univariate factors tried in recombination.
  std::size_t max_recombination_pool = 18;
};

/// Factors p over Q into normalized irreducibles. Factors are sorted by
/// rendered form; p == unit * prod(h^m).
Factorization factor(const Poly& p, const FactorLimits& limits = {});

/// Rational roots of a polynomial involving at most variable v.
std::vector<Rat> rational_roots_in(const Poly& p, std::size_t v);

}  // namespace jacdiv
