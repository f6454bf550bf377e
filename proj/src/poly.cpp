#include "jacdiv/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "jacdiv/errors.hpp"

namespace jacdiv {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto names = std::make_shared<const std::vector<std::string>>();
  return names;
}

bool grlex_greater(const Term& a, const Term& b) {
  return grlex_compare(a.mono, b.mono) == std::strong_ordering::greater;
}

// Merges two descending term lists, scaling the second by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = grlex_compare(a[i].mono, b[j].mono);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(sign > 0 ? b[j] : Term{b[j].mono, -b[j].coeff});
      ++j;
    } else {
      Rat c = sign > 0 ? Rat(a[i].coeff + b[j].coeff) : Rat(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(sign > 0 ? b[j] : Term{b[j].mono, -b[j].coeff});
  return out;
}

}  // namespace

VarCtx::VarCtx() : names_(empty_names()) {}

VarCtx::VarCtx(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw CapacityError("too many variables: " + std::to_string(names.size()) + " (limit " +
                        std::to_string(kMaxVars) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("variable names must be nonempty");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarCtx::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  if (value > std::numeric_limits<Exponent>::max()) throw CapacityError("exponent overflow");
  exps_[i] = static_cast<Exponent>(value);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::supported_in(std::size_t lo, std::size_t hi) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if ((i < lo || i >= hi) && exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.exps_[i]) + b.exps_[i];
    if (s > std::numeric_limits<Monomial::Exponent>::max()) throw CapacityError("exponent overflow");
    m.exps_[i] = static_cast<Monomial::Exponent>(s);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a <=> b;
}

void require_same_ctx(const VarCtx& a, const VarCtx& b, const char* what) {
  if (!(a == b)) throw InputError(std::string(what) + ": variable context mismatch");
}

Poly Poly::constant(VarCtx ctx, const Rat& c) {
  Poly p(std::move(ctx));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(VarCtx ctx, std::size_t i) {
  if (i >= ctx.size()) throw InputError("variable index out of range");
  Poly p(std::move(ctx));
  p.terms_.push_back({Monomial::variable(i), Rat(1)});
  return p;
}

Poly Poly::monomial(VarCtx ctx, const Monomial& m, const Rat& c) {
  Poly p(std::move(ctx));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(VarCtx ctx, std::vector<Term> terms) {
  Poly p(std::move(ctx));
  std::sort(terms.begin(), terms.end(), grlex_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat Poly::constant_value() const {
  if (!is_constant()) throw InputError("polynomial is not constant");
  return terms_.empty() ? Rat(0) : terms_[0].coeff;
}

Rat Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rat(0);
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int Poly::degree_in(std::size_t i) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[i]);
  return static_cast<int>(d);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_ctx(ctx_, o.ctx_, "add");
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ctx(ctx_, o.ctx_, "sub");
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ctx(a.ctx_, b.ctx_, "mul");
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  if (b.terms_.size() == 1) {
    Poly r(a.ctx_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.mono * b.terms_[0].mono, t.coeff * b.terms_[0].coeff});
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return Poly::from_terms(a.ctx_, std::move(prod));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ctx_ == b.ctx_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(p.ctx(), Rat(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly partial(const Poly& p, std::size_t j) {
  if (j >= p.nvars()) throw InputError("partial: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[j];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(j, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms of equal degree.
  return Poly::from_terms(p.ctx(), std::move(out));
}

Rat evaluate(const Poly& p, std::span<const Rat> point) {
  if (point.size() != p.nvars()) throw InputError("evaluate: point has wrong arity");
  // Cache powers per variable; degrees are small.
  std::vector<std::vector<Rat>> powers(p.nvars());
  Rat acc = 0;
  for (const auto& t : p.terms()) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rat(1));
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    acc += v;
  }
  return acc;
}

Poly substitute(const Poly& p, std::size_t j, const Rat& value) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[j];
    Monomial m = t.mono;
    m.set(j, 0);
    Rat c = t.coeff;
    if (e > 0) {
      Rat f;
      mpz_pow_ui(f.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(f.get_den_mpz_t(), value.get_den_mpz_t(), e);
      c *= f;
    }
    out.push_back({m, c});
  }
  return Poly::from_terms(p.ctx(), std::move(out));
}

Poly remap(const Poly& p, const VarCtx& target, std::span<const std::size_t> index_map) {
  if (index_map.size() != p.nvars()) throw InputError("remap: index map has wrong size");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map[i] >= target.size()) throw InputError("remap: target index out of range");
      m.set(index_map[i], m[index_map[i]] + t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(target, std::move(out));
}

Poly remap_by_name(const Poly& p, const VarCtx& target) {
  std::vector<std::size_t> map(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto idx = target.index_of(p.ctx().name(i));
    if (!idx) {
      if (p.involves(i)) throw InputError("remap: variable '" + p.ctx().name(i) + "' missing from target");
      map[i] = 0;
      continue;
    }
    map[i] = *idx;
  }
  return remap(p, target, map);
}

Rat content(const Poly& p) {
  if (p.is_zero()) return Rat(0);
  Int g = 0;
  Int l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return make_rat(g, l);
}

Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Rat c = content(p);
  if (p.leading_coeff() < 0) c = -c;
  Rat inv = 1 / c;
  return p * inv;
}

namespace {

void render_monomial(std::ostringstream& os, const VarCtx& ctx, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    unsigned e = m[i];
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ctx.name(i);
    if (e > 1) os << '^' << e;
  }
}

}  // namespace

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.mono.is_one()) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    render_monomial(os, p.ctx(), t.mono);
  }
  return os.str();
}

}  // namespace jacdiv
