#include <doctest.h>

#include "corpus.hpp"
#include "jacdiv/degree2.hpp"
#include "jacdiv/errors.hpp"
#include "jacdiv/parser.hpp"

using namespace jacdiv;

namespace {

const VarCtx kXY{"x", "y"};
const VarCtx kXYZ{"x", "y", "z"};
const VarCtx kXYZW{"x", "y", "z", "w"};

Poly P(const char* s, const VarCtx& c = kXY) { return parse_poly(s, c); }
RatFunc R(const char* s, const VarCtx& c) { return parse_ratfunc(s, c); }

PolyMap map2(const char* a, const char* b) { return PolyMap(kXY, {P(a), P(b)}); }

PolyMap quadric_fold() {
  return PolyMap(kXYZW, {P("w*x^2 + z*y", kXYZW), P("z*x + w*y", kXYZW), P("z", kXYZW), P("w", kXYZW)});
}

PolyMap cubic_fold() { return PolyMap(kXYZ, {P("y*x^2 + z*x", kXYZ), P("y", kXYZ), P("z", kXYZ)}); }

Involution identity_involution(const VarCtx& c) {
  Involution t;
  for (std::size_t i = 0; i < c.size(); ++i) t.components.emplace_back(Poly::variable(c, i));
  return t;
}

}  // namespace

TEST_CASE("map degree") {
  CHECK(map_degree(map2("x*y", "y^2")) == 2);
  CHECK(map_degree(quadric_fold()) == 2);
  CHECK(map_degree(PolyMap::identity(kXY)) == 1);
  CHECK(map_degree(map2("x^3 - 3*x*y", "y")) == 3);
  CHECK_THROWS_AS(map_degree(map2("x + y", "2*x + 2*y")), InputError);
}

TEST_CASE("anti-invariants") {
  auto a = anti_invariant(quadric_fold());
  CHECK(a.s == P("2*w^2*x - z^2", kXYZW));
  CHECK(compose(a.S, quadric_fold()) == a.s * a.s);

  auto b = anti_invariant(cubic_fold());
  CHECK(b.s == P("2*x*y + z", kXYZ));
  VarCtx img{"Y1", "Y2", "Y3"};
  CHECK(b.S == P("4*Y1*Y2 + Y3^2", img));
  // Independent expansion of 4 f1 f2 + f3^2.
  const auto& f = cubic_fold();
  CHECK(compose(b.S, f) == Rat(4) * f[0] * f[1] + f[2] * f[2]);

  auto c = anti_invariant(map2("x", "y^2"));
  CHECK(c.s == P("y"));
  CHECK(c.S == P("Y2", VarCtx{"Y1", "Y2"}));
  CHECK(c.scale == 2);

  CHECK_THROWS_AS(anti_invariant(map2("x*y", "y^2")), InputError);
  CHECK_THROWS_AS(anti_invariant(PolyMap::identity(kXY)), InputError);
}

TEST_CASE("involutions") {
  auto a = involution(map2("x*y", "y^2"));
  CHECK(a.components == std::vector<RatFunc>{R("-x", kXY), R("-y", kXY)});
  CHECK(a.preserves_map);
  CHECK(a.is_involutive);

  auto b = involution(quadric_fold());
  std::vector<RatFunc> expected{R("-x + z^2/w^2", kXYZW), R("y + 2*z*x/w - z^3/w^3", kXYZW), R("z", kXYZW),
                                R("w", kXYZW)};
  CHECK(b.components == expected);
  CHECK(b.negates_jacobian);

  auto c = involution(cubic_fold());
  CHECK(c.components[0] == R("-x - z/y", kXYZ));
  CHECK(c.components[1] == R("y", kXYZ));
  // Oracle: y*t^2 + z*t = y*x^2 + z*x at t = theta_x.
  RatFunc t = c.components[0];
  RatFunc y = R("y", kXYZ);
  RatFunc z = R("z", kXYZ);
  CHECK(y * t * t + z * t == R("y*x^2 + z*x", kXYZ));

  CHECK_THROWS_AS(involution(PolyMap::identity(kXY)), InputError);
}

TEST_CASE("anti-invariance of s") {
  Involution flip;
  flip.components = {R("-x", kXY), R("-y", kXY)};
  CHECK(verify_anti_invariance(flip, P("y")));
  CHECK(verify_anti_invariance(involution(quadric_fold()), P("2*w^2*x - z^2", kXYZW)));
  CHECK(!verify_anti_invariance(identity_involution(kXY), P("y")));
}

TEST_CASE("denominators lie in the pullback subalgebra") {
  CHECK(denominator_check(involution(quadric_fold()), quadric_fold()));
  CHECK(denominator_check(involution(cubic_fold()), cubic_fold()));
  CHECK(denominator_check(identity_involution(kXY), map2("x", "y^2")));
}

TEST_CASE("auxiliary gcd") {
  CHECK(auxiliary_gcd_check(cubic_fold(), P("2*x*y + z", kXYZ)));
  CHECK(auxiliary_gcd_check(map2("x", "y^2"), P("y")));
  CHECK(auxiliary_gcd_check(quadric_fold(), P("2*w^2*x - z^2", kXYZW)));
  auto aux = auxiliary_maps(cubic_fold(), P("2*x*y + z", kXYZ));
  REQUIRE(aux.maps.size() == 4);
  for (std::size_t j = 0; j < aux.maps.size(); ++j) {
    CHECK(aux.determinants[j] == determinant_cofactor(jacobian_matrix(aux.maps[j])));
  }
}

TEST_CASE("anti-invariants from generators") {
  auto fold = map2("x", "y^2");
  CHECK(semiinvariant_from_generator(fold, involution(fold), P("y")) == P("y"));
  auto q = quadric_fold();
  auto theta = involution(q);
  CHECK(semiinvariant_from_generator(q, theta, P("x", kXYZW)) == P("2*w^2*x - z^2", kXYZW));
  CHECK(semiinvariant_from_generator(q, theta, P("y", kXYZW)) == P("2*w^2*x - z^2", kXYZW));
  CHECK_THROWS_AS(semiinvariant_from_generator(q, theta, q[0]), InputError);
}

TEST_CASE("corpus: degree-two identities") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 6; ++trial) {
    PolyMap m = testing_support::quadratic_corpus_map(rng, 2 + static_cast<std::size_t>(trial % 2));
    if (map_degree(m) != 2) continue;
    bool contracted = false;
    for (const auto& r : classify_jacobian_divisors(m)) contracted |= r.divisor_class == DivisorClass::Contracted;
    auto theta = involution(m);
    CHECK(theta.preserves_map);
    CHECK(theta.is_involutive);
    CHECK(!jacobian_det(m).is_constant());
    if (contracted) continue;
    ++checked;
    auto a = anti_invariant(m);
    CHECK(factor(jacobian_det(m)).factors.size() == 1);
    CHECK(verify_anti_invariance(theta, a.s));
    CHECK(denominator_check(theta, m));
    CHECK(auxiliary_gcd_check(m, a.s));
    CHECK(!subalgebra_membership(a.s, m));
    CHECK(subalgebra_membership(a.s * a.s, m));
    int generators = 0;
    std::vector<Poly> pool;
    for (std::size_t j = 0; j < m.size(); ++j) {
      pool.push_back(Poly::variable(m.ctx(), j));
      for (std::size_t k = j; k < m.size(); ++k) pool.push_back(Poly::variable(m.ctx(), j) * Poly::variable(m.ctx(), k));
    }
    for (const Poly& h : pool) {
      if (apply(theta, RatFunc(h)) == RatFunc(h)) continue;
      CHECK(semiinvariant_from_generator(m, theta, h) == a.s);
      ++generators;
    }
    CHECK(generators >= 3);
  }
  CHECK(checked >= 3);
}
