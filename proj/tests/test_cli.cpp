#include <doctest.h>

#include "support.hpp"
#include "jacdiv/parser.hpp"
#include "jacdiv/report.hpp"

using namespace jacdiv;
using testing_support::random_poly;

namespace {

std::size_t parse_error_column(std::string_view text, const VarCtx& ctx) {
  try {
    parse_poly(text, ctx);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("map files") {
  auto spec = parse_map("# fold\nvars: x y\nseed: 7\nf1 = x*y\nf2 = y^2  # second\n");
  CHECK(spec.ctx.names() == std::vector<std::string>{"x", "y"});
  CHECK(spec.seed == 7u);
  REQUIRE(spec.components.size() == 2);
  CHECK(render(spec.components[0]) == "x*y");
  CHECK(render(spec.components[1]) == "y^2");
  CHECK(spec.map().size() == 2);

  auto lex = parse_map("vars: a b\norder: lex\nbound: 50\nf1 = a + 1/2*b\nf2 = b\n");
  CHECK(lex.order == "lex");
  CHECK(lex.bound == 50);
}

TEST_CASE("map file errors carry positions") {
  try {
    parse_map("vars: x y\nf1 = x*q\nf2 = y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_map("vars: x y\nf1 = x\n"), InputError);
  CHECK_THROWS_AS(parse_map("vars: x x\nf1 = x\nf2 = x\n"), InputError);
  CHECK_THROWS_AS(parse_map("vars: x y\nf2 = x\nf1 = y\n"), InputError);
  CHECK_THROWS_AS(parse_map("f1 = x\n"), InputError);
  CHECK_THROWS_AS(parse_map("vars: x y\norder: weird\nf1 = x\nf2 = y\n"), InputError);
}

TEST_CASE("expression errors") {
  VarCtx c{"x", "y"};
  CHECK(parse_error_column("x +", c) == 4);
  CHECK(parse_error_column("x / y", c) == 3);
  CHECK(parse_error_column("x^-1", c) == 3);
  CHECK(parse_error_column("(x + y", c) == 7);
  CHECK(parse_error_column("x ^ 2.5", c) != 0);
  CHECK(parse_error_column("2x", c) == 2);
  CHECK(parse_error_column("x^3/3", c) == 4);
  CHECK(parse_poly("2/3*x^3", c) == parse_poly("x^3*2/3", c));
  CHECK(parse_poly("-(x - y)^2", c) == parse_poly("-x^2 + 2*x*y - y^2", c));
  CHECK_THROWS_AS(parse_ratfunc("x/(y - y)", c), InputError);
}

TEST_CASE("points") {
  auto p = parse_point("1, -2/3,0");
  REQUIRE(p.size() == 3);
  CHECK(p[1] == make_rat(-2, 3));
  CHECK_THROWS_AS(parse_point("1,,2"), InputError);
  CHECK_THROWS_AS(parse_point("1/0"), InputError);
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 4; ++n) {
    VarCtx c = testing_support::ctx_n(n);
    for (int i = 0; i < 60; ++i) {
      Poly p = random_poly(rng, c, 5, 6);
      CHECK(parse_poly(render(p), c) == p);
      Poly q = random_poly(rng, c, 3, 3);
      if (q.is_zero()) continue;
      RatFunc r(p, q);
      INFO(render(r));
      CHECK(parse_ratfunc(render(r), c) == r);
    }
  }
}

TEST_CASE("report JSON round trip") {
  Report r;
  r.seed = 5;
  r.variables = {"x", "y"};
  r.image_variables = {"Y1", "Y2"};
  r.jacobian = "y";
  DivisorEntry d;
  d.factor = "y";
  d.divisor_class = "Contracted";
  d.witness = std::pair<std::string, std::string>{"Y1", "Y2"};
  d.irreducibility = "verified";
  r.divisor_reports.push_back(d);
  r.degree = 2;
  r.anti_invariant = AntiInvariantEntry{"y", "Y2", "2"};
  r.involution_components = std::vector<std::string>{"x", "-y"};
  r.verification_flags["involutive"] = true;
  r.verification_flags["map_invariant"] = false;
  r.timing = 0.25;
  r.fiber = FiberEntry{{"0", "1"}, true, 2, 0, {{"0", "1"}, {"0", "-1"}}};
  r.image = ImageEntry{"y", {"Y2"}, 1, "Y2"};
  std::string text = to_json(r);
  CHECK(report_from_json(text) == r);
  CHECK(to_json(report_from_json(text)) == text);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"seed\"") < text.find("\"variables\""));

  Report minimal;
  CHECK(report_from_json(to_json(minimal)) == minimal);
  CHECK_THROWS_AS(report_from_json("{"), InputError);
  CHECK_THROWS_AS(report_from_json("{\"seed\": \"x\"}"), InputError);
}
