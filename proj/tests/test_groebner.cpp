#include <doctest.h>

#include "jacdiv/errors.hpp"
#include "jacdiv/gcd.hpp"
#include "jacdiv/groebner.hpp"
#include "jacdiv/parser.hpp"
#include "jacdiv/ratfunc.hpp"
#include "support.hpp"

using namespace jacdiv;

namespace {

Poly P(const char* s, const VarCtx& c) { return parse_poly(s, c); }

std::vector<Poly> polys(const VarCtx& c, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (auto t : texts) out.push_back(P(t, c));
  return out;
}

bool same_ideal_basis(const GroebnerBasis& g, std::vector<Poly> expected) {
  auto got = g.basis();
  if (got.size() != expected.size()) return false;
  for (const auto& e : expected) {
    if (std::find(got.begin(), got.end(), e) == got.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("monomial orders") {
  Monomial x = Monomial::variable(0);
  Monomial y2 = Monomial::variable(1, 2);
  CHECK(MonomialOrder::lex(2).greater(x, y2));
  CHECK(MonomialOrder::grevlex(2).greater(y2, x));
  auto block = MonomialOrder::block(1, 3);
  CHECK(block.greater(x, Monomial::variable(1, 5)));
  CHECK_THROWS_AS(MonomialOrder::block(0, 3), InputError);
  CHECK_THROWS_AS(MonomialOrder::block(3, 3), InputError);
}

TEST_CASE("buchberger examples") {
  VarCtx c{"x"};
  CHECK(same_ideal_basis(buchberger(Ideal(c, polys(c, {"x"})), MonomialOrder::lex(1)), polys(c, {"x"})));
  auto unit = buchberger(Ideal(c, polys(c, {"x - 1", "x"})), MonomialOrder::lex(1));
  CHECK(unit.is_unit());
  CHECK(same_ideal_basis(unit, polys(c, {"1"})));

  VarCtx z{"x1", "y1", "x2", "y2"};
  Ideal ideal(z, polys(z, {"y1^2 - y2^2", "x1*y1 - x2*y2"}));
  for (auto ord : {MonomialOrder::lex(4), MonomialOrder::grevlex(4), MonomialOrder::block(2, 4)}) {
    auto g = buchberger(ideal, ord);
    for (const auto& gen : ideal.generators()) CHECK(normal_form(gen, g).is_zero());
    CHECK(gb::satisfies_buchberger_criterion(g.raw(), ord));
  }
  CHECK_THROWS_AS(Ideal(c, {}), InputError);
  CHECK_THROWS_AS(Ideal(c, {Poly(c)}), InputError);
}

TEST_CASE("normal forms") {
  VarCtx z{"x", "y1", "y2"};
  auto g = buchberger(Ideal(z, polys(z, {"y1^2 - y2^2"})), MonomialOrder::grevlex(3));
  CHECK(normal_form(P("y1^2 - y2^2", z), g).is_zero());
  CHECK(normal_form(P("1", z), g) == P("1", z));
  CHECK(normal_form(P("x*(y1^2 - y2^2) + y2", z), g) == P("y2", z));
}

TEST_CASE("elimination ideals") {
  VarCtx c{"x", "y", "Y1", "Y2"};
  std::vector<std::size_t> keep{2, 3};
  VarCtx img{"Y1", "Y2"};
  auto dense = elimination_ideal(Ideal(c, polys(c, {"Y1 - x*y", "Y2 - y"})), keep);
  CHECK(dense.is_zero_ideal());
  CHECK(dense.ctx() == img);
  auto diag = elimination_ideal(Ideal(c, polys(c, {"Y1 - x", "Y2 - x"})), keep);
  CHECK(same_ideal_basis(diag, polys(img, {"Y1 - Y2"})));
  auto origin = elimination_ideal(Ideal(c, polys(c, {"y", "Y1 - x*y", "Y2 - y"})), keep);
  CHECK(same_ideal_basis(origin, polys(img, {"Y1", "Y2"})));
  std::vector<std::size_t> everything{0, 1, 2, 3};
  CHECK_THROWS_AS(elimination_ideal(Ideal(c, polys(c, {"x"})), everything), InputError);
}

TEST_CASE("ideal dimension") {
  VarCtx c{"Y1", "Y2"};
  CHECK(ideal_dimension(GroebnerBasis(c, MonomialOrder::grevlex(2), {})) == 2);
  CHECK(ideal_dimension(buchberger(Ideal(c, polys(c, {"Y1", "Y2"})), MonomialOrder::grevlex(2))) == 0);
  CHECK(ideal_dimension(buchberger(Ideal(c, polys(c, {"Y2"})), MonomialOrder::grevlex(2))) == 1);
  CHECK(ideal_dimension(buchberger(Ideal(c, polys(c, {"Y1 - 1", "Y1"})), MonomialOrder::grevlex(2))) == -1);
}

TEST_CASE("saturation") {
  VarCtx c{"x", "y"};
  CHECK(same_ideal_basis(saturate(Ideal(c, polys(c, {"x*y"})), P("x", c)), polys(c, {"y"})));
  CHECK(same_ideal_basis(saturate(Ideal(c, polys(c, {"x"})), P("y", c)), polys(c, {"x"})));
  CHECK_THROWS_AS(saturate(Ideal(c, polys(c, {"x"})), Poly(c)), InputError);
}

TEST_CASE("saturation over a rational function field") {
  // <XY - xy, Y^2 - y^2> : (Y - y)^inf over Q(x, y) is <X + x, Y + y>.
  VarCtx params{"x", "y"};
  RatFunc one = RatFunc::constant(params, 1);
  RatFunc x(Poly::variable(params, 0));
  RatFunc y(Poly::variable(params, 1));
  using G = gb::GPoly<RatFunc>;
  Monomial X = Monomial::variable(0);
  Monomial Y = Monomial::variable(1);
  G a{{X * Y, one}, {Monomial{}, -(x * y)}};
  G b{{Y * Y, one}, {Monomial{}, -(y * y)}};
  G g{{Y, one}, {Monomial{}, -y}};
  auto basis = gb::saturate<RatFunc>({a, b}, g, 2, one, {});
  REQUIRE(basis.size() == 2);
  // Sorted by increasing leading monomial: Y + y, then X + x.
  CHECK(basis[0].front().mono == Y);
  CHECK(basis[0].back().coeff == y);
  CHECK(basis[1].front().mono == X);
  CHECK(basis[1].back().coeff == x);
}

TEST_CASE("subalgebra membership") {
  VarCtx c{"x", "y"};
  PolyMap m(c, polys(c, {"x*y", "y"}));
  VarCtx img{"Y1", "Y2"};
  CHECK(subalgebra_membership(P("x*y", c), m) == P("Y1", img));
  CHECK(!subalgebra_membership(P("x", c), m));
  VarCtx c3{"x", "y", "z"};
  PolyMap m3(c3, polys(c3, {"y*x^2 + z*x", "y", "z"}));
  VarCtx img3{"Y1", "Y2", "Y3"};
  CHECK(subalgebra_membership(P("(2*x*y + z)^2", c3), m3) == P("4*Y1*Y2 + Y3^2", img3));
}

TEST_CASE("standard monomials count a zero-dimensional quotient") {
  VarCtx c{"x", "y"};
  auto g = buchberger(Ideal(c, polys(c, {"x - 1", "y^2 - 1"})), MonomialOrder::grevlex(2));
  CHECK(standard_monomial_count(g) == 2u);
  auto line = buchberger(Ideal(c, polys(c, {"y"})), MonomialOrder::grevlex(2));
  CHECK(!standard_monomial_count(line));
}

TEST_CASE("capacity limits are enforced") {
  VarCtx c{"x", "y", "z"};
  GroebnerLimits tight;
  tight.max_degree = 3;
  CHECK_THROWS_AS(buchberger(Ideal(c, polys(c, {"x^2*y - z^3", "x*y^2 - z", "x^3 - y*z"})), MonomialOrder::lex(3), tight),
                  CapacityError);
}

TEST_CASE("random ideals: criterion, membership and canonical form") {
  std::mt19937_64 rng(21);
  auto c = testing_support::ctx_n(3);
  auto ord = MonomialOrder::grevlex(3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing_support::random_nonconstant(rng, c, 2, 3));
    auto g = buchberger(Ideal(c, gens), ord);
    CHECK(gb::satisfies_buchberger_criterion(g.raw(), ord));
    for (const auto& p : gens) CHECK(normal_form(p, g).is_zero());
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(gens[0] * gens[1] + gens[2]);
    CHECK(buchberger(Ideal(c, shuffled), ord).basis() == g.basis());
  }
}

TEST_CASE("saturation contains the ideal and its members have witnesses") {
  std::mt19937_64 rng(22);
  auto c = testing_support::ctx_n(2);
  auto ord = MonomialOrder::grevlex(2);
  for (int trial = 0; trial < 10; ++trial) {
    Poly g = testing_support::random_nonconstant(rng, c, 1, 2);
    Poly a = testing_support::random_nonconstant(rng, c, 2, 3);
    Poly b = testing_support::random_nonconstant(rng, c, 2, 3);
    Ideal ideal(c, {a * g, b * g * g});
    auto base = buchberger(ideal, ord);
    auto sat = saturate(ideal, g);
    for (const auto& p : ideal.generators()) CHECK(sat.contains(p));
    for (const auto& h : sat.basis()) {
      bool witnessed = false;
      Poly power = h;
      for (int k = 0; k <= 8 && !witnessed; ++k) {
        witnessed = normal_form(power, base).is_zero();
        power *= g;
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("elimination agrees with the Sylvester resultant") {
  std::mt19937_64 rng(23);
  VarCtx c{"x", "y"};
  VarCtx yc{"y"};
  int exact = 0;
  for (int trial = 0; trial < 12; ++trial) {
    // Constant leading coefficients in x rule out extraneous factors.
    Poly p = P("x^2", c) + testing_support::random_poly(rng, c, 2, 3);
    Poly q = P("x^3", c) + testing_support::random_poly(rng, c, 3, 3);
    if (p.degree_in(0) != 2 || q.degree_in(0) != 3 || !gcd(p, q).is_constant()) continue;
    Poly res = testing_support::sylvester_resultant(p, q, yc);
    std::vector<std::size_t> keep{1};
    auto elim = elimination_ideal(Ideal(c, {p, q}), keep);
    REQUIRE(elim.basis().size() == 1);
    Poly g = elim.basis().front();
    CHECK(divides(g, res));
    if (!res.is_constant() && is_squarefree(res)) {
      CHECK(normalize(g) == normalize(res));
      ++exact;
    }
  }
  CHECK(exact > 0);
}
