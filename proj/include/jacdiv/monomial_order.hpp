#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "jacdiv/poly.hpp"

namespace jacdiv {

enum class OrderKind { Lex, Grevlex, Block };

/// Monomial order on the first n variables. A block order compares the
/// first `prefix` variables with `first` and breaks ties on the remaining
/// variables with `rest`; it eliminates the prefix.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t n);
  static MonomialOrder grevlex(std::size_t n);
  static MonomialOrder block(std::size_t prefix, std::size_t n, OrderKind first = OrderKind::Grevlex,
                             OrderKind rest = OrderKind::Grevlex);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  OrderKind kind() const { return kind_; }
  std::size_t prefix() const { return prefix_; }
  std::size_t nvars() const { return n_; }
  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t prefix, std::size_t n, OrderKind first, OrderKind rest)
      : kind_(kind), prefix_(prefix), n_(n), first_(first), rest_(rest) {}

  OrderKind kind_;
  std::size_t prefix_;
  std::size_t n_;
  OrderKind first_;
  OrderKind rest_;
};

}  // namespace jacdiv
