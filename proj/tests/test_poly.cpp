#include <doctest.h>

#include "jacdiv/errors.hpp"
#include "jacdiv/factor.hpp"
#include "jacdiv/parser.hpp"
#include "jacdiv/polymap.hpp"
#include "jacdiv/ratfunc.hpp"
#include "support.hpp"

using namespace jacdiv;
using testing_support::random_nonconstant;
using testing_support::random_poly;

namespace {

const VarCtx kXY{"x", "y"};
const VarCtx kXYZW{"x", "y", "z", "w"};

Poly P(const char* s, const VarCtx& c = kXY) { return parse_poly(s, c); }

PolyMap quadric_fold() {
  return PolyMap(kXYZW, {P("w*x^2 + z*y", kXYZW), P("z*x + w*y", kXYZW), P("z", kXYZW), P("w", kXYZW)});
}

}  // namespace

TEST_CASE("arithmetic") {
  CHECK(P("x + y") + P("x - y") == P("2*x"));
  CHECK((P("x^2 + 3*y") * Poly(kXY)).is_zero());
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(render(P("x + y") * P("x - y")) == "x^2 - y^2");
  CHECK_THROWS_AS(P("x") + Poly::variable(VarCtx{"a", "b"}, 0), InputError);
}

TEST_CASE("partial derivatives") {
  const VarCtx& c = kXYZW;
  CHECK(partial(P("w*x^2 + z*y", c), 0) == P("2*w*x", c));
  CHECK(partial(P("7/3", c), 0).is_zero());
  CHECK(partial(P("z*x + w*y", c), 1) == P("w", c));
  CHECK_THROWS_AS(partial(P("x"), 5), InputError);
}

TEST_CASE("jacobian matrix and determinant") {
  PolyMap m(kXY, {P("x*y"), P("y")});
  auto j = jacobian_matrix(m);
  CHECK(j(0, 0) == P("y"));
  CHECK(j(0, 1) == P("x"));
  CHECK(j(1, 0).is_zero());
  CHECK(j(1, 1) == P("1"));
  CHECK(jacobian_det(m) == P("y"));
  CHECK(jacobian_det(PolyMap::identity(kXY)) == P("1"));

  auto j4 = jacobian_matrix(quadric_fold());
  CHECK(j4(0, 0) == P("2*w*x", kXYZW));
  CHECK(j4(0, 1) == P("z", kXYZW));
  CHECK(j4(0, 2) == P("y", kXYZW));
  CHECK(j4(0, 3) == P("x^2", kXYZW));
  CHECK(jacobian_det(quadric_fold()) == P("2*w^2*x - z^2", kXYZW));
  CHECK(determinant_bareiss(j4) == determinant_cofactor(j4));
}

TEST_CASE("determinant methods agree on random matrices") {
  std::mt19937_64 rng(11);
  auto c = testing_support::ctx_n(3);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(c, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_poly(rng, c, 2, 2);
    }
    CHECK(determinant_bareiss(m) == determinant_cofactor(m));
  }
}

TEST_CASE("pullback composition") {
  VarCtx img{"Y1", "Y2"};
  CHECK(compose(P("Y1*Y2", img), PolyMap(kXY, {P("x*y"), P("y")})) == P("x*y^2"));
  CHECK(compose(P("Y2", img), PolyMap(kXY, {P("x*y"), P("x + 3")})) == P("x + 3"));
  VarCtx c3{"x", "y", "z"};
  VarCtx img3{"Y1", "Y2", "Y3"};
  PolyMap m(c3, {P("y*x^2 + z*x", c3), P("y", c3), P("z", c3)});
  CHECK(compose(P("4*Y1*Y2 + Y3^2", img3), m) == pow(P("2*x*y + z", c3), 2));
  CHECK_THROWS_AS(compose(P("Y1", img3), PolyMap(kXY, {P("x"), P("y")})), InputError);
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x*y"), P("y")) == P("y"));
  CHECK(gcd(P("x^3 - y"), P("1")) == P("1"));
  CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
  CHECK(gcd(P("-6*x^2"), P("0")) == P("x^2"));
  CHECK_THROWS_AS(gcd(Poly(kXY), Poly(kXY)), InputError);
}

TEST_CASE("square-free decomposition") {
  auto a = squarefree_decomposition(P("2*y^2"));
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].first == P("y"));
  CHECK(a.factors[0].second == 2);
  auto b = squarefree_decomposition(P("x^2 - y^2"));
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0] == std::pair{P("x^2 - y^2"), 1u});
  auto c = squarefree_decomposition(P("y*(x + y)^2"));
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[0] == std::pair{P("y"), 1u});
  CHECK(c.factors[1] == std::pair{P("x + y"), 2u});
  CHECK_THROWS_AS(squarefree_decomposition(P("5")), InputError);
}

TEST_CASE("factorization") {
  auto a = factor(P("2*w^2*x - z^2", kXYZW));
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0] == std::pair{P("2*w^2*x - z^2", kXYZW), 1u});
  auto b = factor(P("y^2"));
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0] == std::pair{P("y"), 2u});
  auto c = factor(P("x^2*y - y^3"));
  REQUIRE(c.factors.size() == 3);
  std::vector<Poly> got;
  for (const auto& [h, m] : c.factors) {
    CHECK(m == 1);
    got.push_back(h);
  }
  CHECK(std::find(got.begin(), got.end(), P("y")) != got.end());
  CHECK(std::find(got.begin(), got.end(), P("x - y")) != got.end());
  CHECK(std::find(got.begin(), got.end(), P("x + y")) != got.end());
  CHECK(factor(P("x^4 + 4")).factors.size() == 2);
  CHECK(factor(P("x^2 + y^2")).factors.size() == 1);
  FactorLimits tight;
  tight.max_total_degree = 3;
  CHECK_THROWS_AS(factor(P("x^4*y - 1"), tight), CapacityError);
}

TEST_CASE("divisibility") {
  VarCtx c3{"x", "y", "z"};
  CHECK(divides(P("y^2"), P("y^2")) == P("1"));
  CHECK(!divides(P("y"), P("x")));
  auto q = divides(P("(2*x*y + z)^2", c3), P("4*(y*x^2 + z*x)*y + z^2", c3));
  REQUIRE(q);
  CHECK(*q == P("1", c3));
  CHECK_THROWS_AS(divides(Poly(kXY), P("x")), InputError);
}

TEST_CASE("evaluation") {
  std::vector<Rat> pt{1, 0, 0, 1};
  CHECK(evaluate(P("2*w^2*x - z^2", kXYZW), pt) == 2);
  std::vector<Rat> zero{0, 0};
  CHECK(evaluate(P("3*x^2 - 5*y + 7/2"), zero) == Rat(7, 2));
  std::vector<Rat> p2{3, Rat(1, 3)};
  CHECK(evaluate(P("x*y"), p2) == 1);
  std::vector<Rat> bad{1};
  CHECK_THROWS_AS(evaluate(P("x"), bad), InputError);
}

TEST_CASE("rational functions reduce") {
  RatFunc r(P("x^2 - y^2"), P("2*x - 2*y"));
  CHECK(r.den() == P("1"));
  CHECK(r.num() == P("1/2*x + 1/2*y"));
  RatFunc s(P("x"), P("-y"));
  CHECK(s.den() == P("y"));
  CHECK(s.num() == P("-x"));
  CHECK((s - s).is_zero());
  CHECK_THROWS_AS(RatFunc(P("x"), Poly(kXY)), InputError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(1);
  auto c = testing_support::ctx_n(3);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(rng, c, 3, 4);
    Poly b = random_poly(rng, c, 3, 4);
    Poly d = random_poly(rng, c, 3, 4);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("Leibniz rule") {
  std::mt19937_64 rng(2);
  auto c = testing_support::ctx_n(3);
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = random_poly(rng, c, 4, 4);
    Poly b = random_poly(rng, c, 4, 4);
    for (std::size_t j = 0; j < 3; ++j) CHECK(partial(a * b, j) == partial(a, j) * b + a * partial(b, j));
  }
}

TEST_CASE("gcd properties on random inputs") {
  std::mt19937_64 rng(3);
  auto c = testing_support::ctx_n(3);
  for (int trial = 0; trial < 30; ++trial) {
    Poly common = random_nonconstant(rng, c, 2, 3);
    Poly a = common * random_poly(rng, c, 2, 3);
    Poly b = common * random_poly(rng, c, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    Poly g = gcd(a, b);
    auto qa = divides(g, a);
    auto qb = divides(g, b);
    REQUIRE(qa);
    REQUIRE(qb);
    CHECK(divides(normalize(common), g));
    CHECK(gcd(*qa, *qb).is_constant());
  }
}

TEST_CASE("factorization round trip on random products") {
  std::mt19937_64 rng(4);
  auto c = testing_support::ctx_n(3);
  for (int trial = 0; trial < 25; ++trial) {
    Poly p = Poly::constant(c, Rat(testing_support::uniform(rng, 1, 6)));
    int parts = testing_support::uniform(rng, 1, 3);
    for (int k = 0; k < parts; ++k) p *= random_nonconstant(rng, c, 2, 3);
    if (p.is_constant()) continue;
    auto f = factor(p);
    CHECK(expand(c, f) == p);
    for (const auto& [h, m] : f.factors) {
      CHECK(h == normalize(h));
      CHECK(factor(h).factors.size() == 1);
    }
  }
}

TEST_CASE("square-free decomposition agrees with factorization") {
  std::mt19937_64 rng(5);
  auto c = testing_support::ctx_n(2);
  for (int trial = 0; trial < 25; ++trial) {
    Poly a = random_nonconstant(rng, c, 2, 3);
    Poly b = random_nonconstant(rng, c, 2, 3);
    Poly p = a * a * b;
    auto sq = squarefree_decomposition(p);
    auto f = factor(p);
    // Every irreducible factor sits in exactly the square-free part of its
    // multiplicity.
    for (const auto& [h, m] : f.factors) {
      int hits = 0;
      for (const auto& [q, k] : sq.factors) {
        if (divides(h, q)) {
          ++hits;
          CHECK(k == m);
        }
      }
      CHECK(hits == 1);
    }
    CHECK(expand(c, sq) == p);
  }
}

TEST_CASE("chain rule at random points") {
  std::mt19937_64 rng(6);
  auto c = testing_support::ctx_n(2);
  for (int trial = 0; trial < 15; ++trial) {
    PolyMap phi(c, {random_poly(rng, c, 2, 3), random_poly(rng, c, 2, 3)});
    PolyMap psi(c, {random_poly(rng, c, 2, 3), random_poly(rng, c, 2, 3)});
    auto lhs_m = jacobian_matrix(compose(phi, psi));
    std::vector<Rat> a{Rat(testing_support::uniform(rng, -5, 5)), make_rat(testing_support::uniform(rng, -5, 5), 3)};
    auto psi_a = evaluate(psi, a);
    auto jphi = evaluate(jacobian_matrix(phi), psi_a);
    auto jpsi = evaluate(jacobian_matrix(psi), a);
    auto lhs = evaluate(lhs_m, a);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        Rat s = 0;
        for (std::size_t k = 0; k < 2; ++k) s += jphi[i][k] * jpsi[k][j];
        CHECK(lhs[i][j] == s);
      }
    }
  }
}
