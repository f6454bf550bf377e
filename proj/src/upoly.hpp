#pragma once

// Dense univariate polynomials over Z and Z/p used by the factorizer.
// Coefficient vectors are stored lowest degree first and kept trimmed.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "jacdiv/rational.hpp"

namespace jacdiv::detail {

using ZPoly = std::vector<Int>;
using FpPoly = std::vector<std::uint64_t>;

int degree(const ZPoly& f);
void trim(ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);
Int content(const ZPoly& f);
/// Divides by the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& f);
/// Quotient over Z if b divides a exactly.
std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b);
/// Primitive gcd over Z with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Square-free decomposition of a primitive polynomial: pairs (part, mult).
std::vector<std::pair<ZPoly, unsigned>> squarefree(const ZPoly& f);

/// Irreducible factors over Z of a square-free primitive polynomial with
/// positive leading coefficient and degree >= 1. Each factor is primitive
/// with positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

/// Irreducible factors over Z of any nonconstant polynomial, listed with
/// repetition according to multiplicity. The sign and integer content are
/// dropped.
std::vector<ZPoly> factor_with_repeats(const ZPoly& f);

/// Rational roots of a nonzero polynomial, without multiplicity.
std::vector<Rat> rational_roots(const ZPoly& f);

// Arithmetic modulo a prime p < 2^32.
struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t reduce(const Int& z) const;

  void trim(FpPoly& f) const;
  FpPoly reduce(const ZPoly& f) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly rem(FpPoly a, const FpPoly& m) const;
  /// Quotient and remainder; b nonzero.
  std::pair<FpPoly, FpPoly> divrem(FpPoly a, const FpPoly& b) const;
  FpPoly monic(FpPoly f) const;
  FpPoly gcd(FpPoly a, FpPoly b) const;
  /// Inverse of a modulo m; a and m coprime.
  FpPoly inverse_mod(const FpPoly& a, const FpPoly& m) const;
  FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& m) const;
  FpPoly derivative(const FpPoly& f) const;

  /// Monic irreducible factors of a monic square-free polynomial.
  std::vector<FpPoly> berlekamp(const FpPoly& f, std::mt19937_64& rng) const;
};

}  // namespace jacdiv::detail
