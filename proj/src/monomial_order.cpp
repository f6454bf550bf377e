#include "jacdiv/monomial_order.hpp"

#include "jacdiv/errors.hpp"

namespace jacdiv {

namespace {

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_range(OrderKind kind, const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  return kind == OrderKind::Lex ? lex_range(a, b, lo, hi) : grevlex_range(a, b, lo, hi);
}

const char* name(OrderKind k) {
  switch (k) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Block:
      return "block";
  }
  return "?";
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t n) {
  return MonomialOrder(OrderKind::Lex, 0, n, OrderKind::Lex, OrderKind::Lex);
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  return MonomialOrder(OrderKind::Grevlex, 0, n, OrderKind::Grevlex, OrderKind::Grevlex);
}

MonomialOrder MonomialOrder::block(std::size_t prefix, std::size_t n, OrderKind first, OrderKind rest) {
  if (prefix == 0 || prefix >= n) throw InputError("block order: prefix length must lie strictly between 0 and n");
  if (first == OrderKind::Block || rest == OrderKind::Block) throw InputError("block order: inner orders must be lex or grevlex");
  return MonomialOrder(OrderKind::Block, prefix, n, first, rest);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      return lex_range(a, b, 0, n_);
    case OrderKind::Grevlex:
      return grevlex_range(a, b, 0, n_);
    case OrderKind::Block:
      if (auto c = compare_range(first_, a, b, 0, prefix_); c != 0) return c;
      return compare_range(rest_, a, b, prefix_, n_);
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  if (kind_ != OrderKind::Block) return name(kind_);
  return std::string("block(") + std::to_string(prefix_) + ", " + name(first_) + ", " + name(rest_) + ")";
}

}  // namespace jacdiv
