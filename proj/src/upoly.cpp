#include "upoly.hpp"

#include <algorithm>
#include <functional>

#include "jacdiv/errors.hpp"

namespace jacdiv::detail {

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(d);
  return d;
}

Int content(const ZPoly& f) {
  Int g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  Int c = content(f);
  if (f.back() < 0) c = -c;
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw InputError("exact_div: division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Int(0));
  const Int& lb = b.back();
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    Int& top = r[static_cast<std::size_t>(k) + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Int c = top / lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[static_cast<std::size_t>(k) + j] -= c * b[j];
    q[static_cast<std::size_t>(k)] = c;
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

namespace {

// Pseudo-remainder: lc(b)^(da-db+1) * a mod b.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  const Int& lb = b.back();
  while (degree(a) >= db && !a.empty()) {
    Int la = a.back();
    int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(shift) + j] -= la * b[j];
    trim(a);
  }
  return a;
}

Int isqrt_ceil(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  return r;
}

bool coprime_mod_some_prime(const ZPoly& a, const ZPoly& b) {
  // A gcd of degree 0 modulo a prime not dividing both leading coefficients
  // certifies coprimality over Z.
  for (std::uint64_t p : {1000000007ULL, 998244353ULL}) {
    Fp F{p};
    if (F.reduce(a.back()) == 0 || F.reduce(b.back()) == 0) continue;
    FpPoly g = F.gcd(F.reduce(a), F.reduce(b));
    if (g.size() == 1) return true;
  }
  return false;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  if (degree(a) == 0 || degree(b) == 0) return ZPoly{Int(1)};
  if (coprime_mod_some_prime(a, b)) return ZPoly{Int(1)};
  ZPoly x = primitive_part(a);
  ZPoly y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive_part(r);
    if (!y.empty() && degree(y) == 0) return ZPoly{Int(1)};
  }
  return primitive_part(x);
}

std::vector<std::pair<ZPoly, unsigned>> squarefree(const ZPoly& f) {
  std::vector<std::pair<ZPoly, unsigned>> out;
  ZPoly df = derivative(f);
  ZPoly g = gcd(f, df);
  ZPoly c = *exact_div(f, g);
  ZPoly d = sub(*exact_div(df, g), derivative(c));
  unsigned i = 1;
  while (degree(c) > 0) {
    ZPoly a = gcd(c, d);
    if (degree(a) > 0) out.emplace_back(a, i);
    c = *exact_div(c, a);
    d = sub(*exact_div(d, a), derivative(c));
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo p.

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

std::uint64_t Fp::reduce(const Int& z) const {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

void Fp::trim(FpPoly& f) const {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly Fp::reduce(const ZPoly& f) const {
  FpPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = reduce(f[i]);
  trim(r);
  return r;
}

FpPoly Fp::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

FpPoly Fp::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> Fp::divrem(FpPoly a, const FpPoly& b) const {
  if (b.empty()) throw InputError("polynomial division by zero modulo p");
  if (a.size() < b.size()) return {FpPoly{}, a};
  FpPoly q(a.size() - b.size() + 1, 0);
  std::uint64_t inv_lb = inv(b.back());
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    std::uint64_t c = mul(a[k + b.size() - 1], inv_lb);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = sub(a[k + j], mul(c, b[j]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

FpPoly Fp::rem(FpPoly a, const FpPoly& m) const {
  if (a.size() < m.size()) return a;
  return divrem(std::move(a), m).second;
}

FpPoly Fp::monic(FpPoly f) const {
  if (f.empty()) return f;
  std::uint64_t i = inv(f.back());
  for (auto& c : f) c = mul(c, i);
  return f;
}

FpPoly Fp::gcd(FpPoly a, FpPoly b) const {
  while (!b.empty()) {
    FpPoly r = rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

FpPoly Fp::inverse_mod(const FpPoly& a, const FpPoly& m) const {
  // Extended Euclid tracking the coefficient of a.
  FpPoly r0 = m;
  FpPoly r1 = rem(a, m);
  FpPoly s0;
  FpPoly s1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1);
    FpPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw InvariantViolation("inverse_mod: arguments not coprime");
  std::uint64_t c = inv(r0[0]);
  for (auto& v : s0) v = mul(v, c);
  return rem(s0, m);
}

FpPoly Fp::powmod(FpPoly base, std::uint64_t e, const FpPoly& m) const {
  FpPoly r{1};
  base = rem(std::move(base), m);
  while (e > 0) {
    if (e & 1u) r = rem(mul(r, base), m);
    e >>= 1u;
    if (e > 0) base = rem(mul(base, base), m);
  }
  return r;
}

FpPoly Fp::derivative(const FpPoly& f) const {
  if (f.size() <= 1) return {};
  FpPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % p);
  trim(d);
  return d;
}

namespace {

// Basis of {g : g^p == g mod f}, as polynomials of degree < deg f.
std::vector<FpPoly> berlekamp_basis(const Fp& F, const FpPoly& f) {
  const std::size_t n = f.size() - 1;
  const FpPoly xp = F.powmod(FpPoly{0, 1}, F.p, f);
  // Transposed matrix Q - I: column i holds x^(i p) mod f.
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  FpPoly row{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) m[j][i] = row[j];
    m[i][i] = F.sub(m[i][i], 1);
    row = F.rem(F.mul(row, xp), f);
  }
  // Reduced row echelon form; record pivot columns.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = F.inv(m[rank][c]);
    for (auto& v : m[rank]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      std::uint64_t factor = m[r][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = F.sub(m[r][k], F.mul(factor, m[rank][k]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<FpPoly> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FpPoly v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = F.sub(0, m[r][free]);
    F.trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<FpPoly> Fp::berlekamp(const FpPoly& f, std::mt19937_64& rng) const {
  if (f.size() <= 2) return {f};
  auto basis = berlekamp_basis(*this, f);
  const std::size_t r = basis.size();
  std::vector<FpPoly> factors{f};
  if (r <= 1) return factors;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  const std::uint64_t half = (p - 1) / 2;
  while (factors.size() < r) {
    FpPoly g;
    for (const auto& b : basis) {
      std::uint64_t c = coeff(rng);
      FpPoly term = b;
      for (auto& v : term) v = mul(v, c);
      g = sub(g, term);
    }
    std::vector<FpPoly> next;
    for (auto& h : factors) {
      if (h.size() <= 2) {
        next.push_back(h);
        continue;
      }
      FpPoly w = sub(powmod(g, half, h), FpPoly{1});
      FpPoly d = gcd(h, w);
      if (d.size() > 1 && d.size() < h.size()) {
        FpPoly other = monic(divrem(h, d).first);
        next.push_back(std::move(d));
        next.push_back(std::move(other));
      } else {
        next.push_back(h);
      }
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Zassenhaus: factor mod p, lift, recombine.

namespace {

ZPoly symmetric_mod(const ZPoly& f, const Int& m) {
  Int half = m / 2;
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] > half) r[i] -= m;
  }
  trim(r);
  return r;
}

ZPoly mod_positive(const ZPoly& f, const Int& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

ZPoly lift_fp(const FpPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

std::uint64_t next_prime_below(std::uint64_t n) {
  Int z = static_cast<unsigned long>(n);
  do {
    z -= 1;
  } while (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0);
  return z.get_ui();
}

// Lifts f == lc * prod(g_i) mod p to a factorization of f * lc^-1 modulo p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const Fp& F, const std::vector<FpPoly>& g, unsigned k,
                               const Int& modulus) {
  const std::size_t r = g.size();
  // Partial-fraction cofactors: sum_i s_i * prod_{j != i} g_j == 1 mod p.
  std::vector<FpPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly others{1};
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) others = F.mul(others, g[j]);
    }
    s[i] = F.inverse_mod(F.rem(others, g[i]), g[i]);
  }
  Int lc_inv;
  if (mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw InvariantViolation("hensel_lift: leading coefficient not invertible");
  }
  ZPoly target(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) target[i] = f[i] * lc_inv;
  target = mod_positive(target, modulus);

  std::vector<ZPoly> lifted;
  lifted.reserve(r);
  for (const auto& gi : g) lifted.push_back(lift_fp(gi));

  const Int p = static_cast<unsigned long>(F.p);
  Int pk = p;
  for (unsigned step = 1; step < k; ++step) {
    Int pk1 = pk * p;
    ZPoly prod{Int(1)};
    for (const auto& l : lifted) prod = mod_positive(mul(prod, l), pk1);
    ZPoly err = mod_positive(sub(mod_positive(target, pk1), prod), pk1);
    FpPoly e(err.size());
    for (std::size_t i = 0; i < err.size(); ++i) {
      Int q = err[i] / pk;
      e[i] = F.reduce(q);
    }
    F.trim(e);
    if (!e.empty()) {
      for (std::size_t i = 0; i < r; ++i) {
        FpPoly delta = F.rem(F.mul(e, s[i]), g[i]);
        ZPoly d = lift_fp(delta);
        for (std::size_t j = 0; j < d.size(); ++j) lifted[i][j] += pk * d[j];
      }
    }
    pk = pk1;
  }
  return lifted;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const int n = degree(f);
  if (n <= 0) throw InputError("factor_squarefree: constant polynomial");
  if (n == 1) return {f};

  // Pick a prime keeping f square-free with the fewest modular factors.
  std::mt19937_64 rng(0x5eed1234ULL);
  const int wanted = n > 200 ? 1 : (n > 60 ? 2 : 4);
  std::optional<Fp> best_field;
  std::vector<FpPoly> best;
  std::uint64_t candidate = 1u << 30;
  int found = 0;
  int attempts = 0;
  while (found < wanted) {
    if (++attempts > 200) throw InvariantViolation("factor_squarefree: no suitable prime found");
    candidate = next_prime_below(candidate);
    Fp F{candidate};
    if (F.reduce(f.back()) == 0) continue;
    FpPoly fp = F.monic(F.reduce(f));
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    ++found;
    auto fac = F.berlekamp(fp, rng);
    if (!best_field || fac.size() < best.size()) {
      best_field = F;
      best = std::move(fac);
    }
    if (best.size() == 1) return {f};
  }
  const Fp& F = *best_field;

  // Coefficient bound for lc * g where g | f.
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int lc_abs = abs(f.back());
  Int bound = isqrt_ceil(norm2) * lc_abs;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound = 2 * bound + 1;
  const Int p = static_cast<unsigned long>(F.p);
  unsigned k = 1;
  Int modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_lift(f, F, best, k, modulus);

  // Recombination over subsets of increasing size.
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = std::move(lifted);
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found_factor = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = mod_positive(mul(cand, pool[i]), modulus);
      cand = symmetric_mod(cand, modulus);
      if (degree(cand) > 0) {
        ZPoly g = primitive_part(cand);
        if (auto q = exact_div(rest, g)) {
          result.push_back(g);
          rest = std::move(*q);
          std::vector<ZPoly> next;
          for (std::size_t i = 0, t = 0; i < pool.size(); ++i) {
            if (t < idx.size() && idx[t] == i) {
              ++t;
              continue;
            }
            next.push_back(std::move(pool[i]));
          }
          pool = std::move(next);
          found_factor = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == pool.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found_factor) ++size;
  }
  if (degree(rest) > 0) result.push_back(primitive_part(rest));
  return result;
}

std::vector<ZPoly> factor_with_repeats(const ZPoly& f) {
  ZPoly g = primitive_part(f);
  std::vector<ZPoly> out;
  if (degree(g) <= 0) return out;
  // Powers of x first; the rest has a nonzero constant term.
  std::size_t shift = 0;
  while (g[shift] == 0) ++shift;
  for (std::size_t i = 0; i < shift; ++i) out.push_back(ZPoly{Int(0), Int(1)});
  g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(shift));
  if (degree(g) <= 0) return out;
  for (const auto& [part, mult] : squarefree(g)) {
    for (const auto& h : factor_squarefree(part)) {
      for (unsigned m = 0; m < mult; ++m) out.push_back(h);
    }
  }
  return out;
}

std::vector<Rat> rational_roots(const ZPoly& f) {
  std::vector<Rat> roots;
  for (const auto& h : factor_with_repeats(f)) {
    if (degree(h) != 1) continue;
    Rat r = make_rat(-h[0], h[1]);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace jacdiv::detail
