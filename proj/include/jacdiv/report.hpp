#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacdiv/degree2.hpp"
#include "jacdiv/geometry.hpp"

namespace jacdiv {

/// Polynomials and rational functions are stored as canonical strings in
/// the source variables, or in the image variables for image polynomials.
struct DivisorEntry {
  std::string factor;
  unsigned multiplicity = 1;
  std::string divisor_class;
  std::optional<std::string> image_polynomial;
  std::optional<std::pair<std::string, std::string>> witness;
  std::optional<std::string> branching_quotient;
  std::optional<bool> conormal;
  std::string irreducibility;

  friend bool operator==(const DivisorEntry&, const DivisorEntry&) = default;
};

struct AntiInvariantEntry {
  std::string s;
  std::string S;
  std::string scale;

  friend bool operator==(const AntiInvariantEntry&, const AntiInvariantEntry&) = default;
};

struct FiberEntry {
  std::vector<std::string> target;
  bool finite = true;
  std::uint64_t count = 0;
  int dimension = 0;
  std::vector<std::vector<std::string>> solutions;

  friend bool operator==(const FiberEntry&, const FiberEntry&) = default;
};

struct ImageEntry {
  std::string factor;
  std::vector<std::string> ideal;
  int dimension = 0;
  std::optional<std::string> image_polynomial;

  friend bool operator==(const ImageEntry&, const ImageEntry&) = default;
};

struct Report {
  std::vector<std::string> variables;
  std::vector<std::string> image_variables;
  std::optional<std::string> jacobian;
  std::vector<DivisorEntry> divisor_reports;
  std::optional<unsigned> degree;
  std::optional<AntiInvariantEntry> anti_invariant;
  std::optional<std::vector<std::string>> involution_components;
  std::map<std::string, bool> verification_flags;
  /// Seconds of wall time; absent when timing is suppressed.
  std::optional<double> timing;
  std::uint64_t seed = 0;
  std::optional<FiberEntry> fiber;
  std::optional<ImageEntry> image;

  friend bool operator==(const Report&, const Report&) = default;
};

DivisorEntry to_entry(const DivisorReport& r);
AntiInvariantEntry to_entry(const AntiInvariant& a);
FiberEntry to_entry(const FiberResult& f, std::span<const Rat> target);

/// Pretty-printed JSON with two-space indentation and a trailing newline.
std::string to_json(const Report& r);

/// Throws InputError on malformed input.
Report report_from_json(const std::string& text);

}  // namespace jacdiv
