#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacdiv/errors.hpp"
#include "jacdiv/polymap.hpp"
#include "jacdiv/ratfunc.hpp"

namespace jacdiv {

/// Syntax or name error at a 1-based line and column.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Polynomial expression with + - * ^ and parentheses over the variables of
/// `ctx`. A slash is accepted only inside a rational literal such as 3/4.
/// `line` is reported in error messages.
Poly parse_poly(std::string_view text, const VarCtx& ctx, std::size_t line = 1);

/// Like parse_poly but with general division.
RatFunc parse_ratfunc(std::string_view text, const VarCtx& ctx, std::size_t line = 1);

/// Parsed map file:
///   vars: x y
///   f1 = x*y
///   f2 = y
/// Optional `seed:`, `bound:` and `order:` lines may precede the components.
struct MapSpec {
  VarCtx ctx;
  std::vector<std::string> sources;
  std::vector<Poly> components;
  std::optional<std::uint64_t> seed;
  std::optional<int> bound;
  std::optional<std::string> order;

  PolyMap map() const { return PolyMap(ctx, components); }
};

MapSpec parse_map(std::string_view text);

/// Comma-separated rationals, e.g. "1,-2/3".
std::vector<Rat> parse_point(std::string_view text);

}  // namespace jacdiv
