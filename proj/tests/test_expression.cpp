#include "doctest.h"
#include "nilverify/expression.hpp"
#include "support.hpp"

using namespace nilverify;

namespace {

const GeneratorSet kGens = GeneratorSet::complex_heisenberg();
Form g(const char* name) { return Form::generator(*kGens.index_of(name)); }

}  // namespace

TEST_SUITE("expression") {
  TEST_CASE("scalars") {
    CHECK(parse_scalar("z6^4") == CycloScalar::zeta6(4));
    CHECK(parse_scalar("z^9") == -CycloScalar::imaginary_unit());
    CHECK(parse_scalar("1/3*(1 + z6)") == CycloScalar(make_rational(1, 3)) * (CycloScalar(1) + CycloScalar::zeta6(1)));
    CHECK(parse_scalar("(1 + z6)^2") == CycloScalar(3) * CycloScalar::zeta6(1));
    CHECK(parse_scalar("z^-1") == CycloScalar::zeta(11));
    CHECK(parse_scalar("-2/4") == CycloScalar(make_rational(-1, 2)));
  }

  TEST_CASE("forms") {
    const Form omega = parse_form("-z^3*mu^~mu + nu^theta + ~nu^~theta", kGens);
    CHECK(omega == -CycloScalar::imaginary_unit() * wedge(g("mu"), g("~mu")) + wedge(g("nu"), g("theta")) +
                       wedge(g("~nu"), g("~theta")));
    CHECK(parse_form("theta^nu", kGens) == -wedge(g("nu"), g("theta")));
    CHECK(parse_form("(mu + nu)^(mu - nu)", kGens) == CycloScalar(-2) * wedge(g("mu"), g("nu")));
    CHECK(parse_form("mu/2", kGens) == g("mu") * CycloScalar(make_rational(1, 2)));
    CHECK(parse_form("0", kGens).is_zero());
  }

  TEST_CASE("round trip through text") {
    testing_support::Random rng(41);
    for (int t = 0; t < 200; ++t) {
      const Form f = rng.any_form(6);
      CHECK(parse_form(f.to_string(kGens), kGens) == f);
      const CycloScalar s = rng.scalar();
      CHECK(parse_scalar(s.to_string()) == s);
    }
  }

  TEST_CASE("errors carry a column") {
    try {
      parse_form("mu + xi", kGens);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 5);
      CHECK(e.unknown_name());
    }
    CHECK_THROWS_AS(parse_form("mu^2", kGens), ParseError);
    CHECK_THROWS_AS(parse_form("mu +", kGens), ParseError);
    CHECK_THROWS_AS(parse_form("(mu", kGens), ParseError);
    CHECK_THROWS_AS(parse_form("mu/nu", kGens), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("mu"), ParseError);
    try {
      parse_form("mu ^ ^ nu", kGens);
    } catch (const ParseError& e) {
      CHECK_FALSE(e.unknown_name());
    }
  }

  TEST_CASE("reserved names") {
    CHECK(is_reserved_name("z"));
    CHECK(is_reserved_name("z6"));
    CHECK_FALSE(is_reserved_name("mu"));
  }
}
