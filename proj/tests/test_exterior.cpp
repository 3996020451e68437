#include "doctest.h"
#include "nilverify/error.hpp"
#include "nilverify/exterior.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nilverify;

namespace {

const GeneratorSet kGens = GeneratorSet::complex_heisenberg();
Form g(const char* name) { return Form::generator(*kGens.index_of(name)); }

}  // namespace

TEST_SUITE("exterior") {
  TEST_CASE("concatenation sign agrees with inversion count") {
    for (std::uint32_t a = 0; a < 64; ++a)
      for (std::uint32_t b = 0; b < 64; ++b)
        CHECK(concatenation_sign(MultiIndex(a), MultiIndex(b)) == oracle::inversion_sign(a, b));
  }

  TEST_CASE("wedge agrees with the bit-mask oracle") {
    testing_support::Random rng(31);
    for (int t = 0; t < 300; ++t) {
      const Form a = rng.any_form(6), b = rng.any_form(6);
      oracle::OForm oa, ob, got;
      for (const auto& [m, c] : a.terms()) oa.emplace(m.bits(), c);
      for (const auto& [m, c] : b.terms()) ob.emplace(m.bits(), c);
      const Form ab = wedge(a, b);
      for (const auto& [m, c] : ab.terms()) got.emplace(m.bits(), c);
      CHECK(got == oracle::owedge(oa, ob));
    }
  }

  TEST_CASE("basic identities") {
    CHECK(wedge(g("mu"), g("mu")).is_zero());
    CHECK(wedge(g("nu"), g("mu")) == -wedge(g("mu"), g("nu")));
    const Form area = wedge(g("mu"), g("~mu"));
    CHECK(wedge(area, g("nu")) == wedge(g("nu"), area));
    CHECK(conj_form(kGens, CycloScalar::imaginary_unit() * wedge(g("mu"), g("nu"))) ==
          -CycloScalar::imaginary_unit() * wedge(g("~mu"), g("~nu")));
    // i mu^~mu is real.
    const Form real = CycloScalar::imaginary_unit() * area;
    CHECK(conj_form(kGens, real) == real);
  }

  TEST_CASE("degrees and bidegrees") {
    const Form f = wedge(g("mu"), g("~nu")) + wedge(g("nu"), g("theta")) + Form(3);
    CHECK_FALSE(f.degree());
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.degree_part(0) == Form(3));
    const auto split = bidegree_split(kGens, f.degree_part(2));
    CHECK(split.at({1, 1}) == wedge(g("mu"), g("~nu")));
    CHECK(split.at({2, 0}) == wedge(g("nu"), g("theta")));
    CHECK(split.count({0, 2}) == 0);
  }

  TEST_CASE("multi-index order and bases") {
    CHECK(MultiIndex::from_positions({0, 2}).bits() == 0b101u);
    CHECK_THROWS_AS(MultiIndex::from_positions({2, 1}), PreconditionError);
    CHECK(MultiIndex(0b100u) < MultiIndex(0b011u));
    CHECK(MultiIndex(0b011u) < MultiIndex(0b101u));
    const std::size_t binom[] = {1, 6, 15, 20, 15, 6, 1};
    for (std::size_t k = 0; k <= 6; ++k) {
      const MonomialBasis b(6, k);
      CHECK(b.size() == binom[k]);
      for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] < b[i + 1]);
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
    }
    const MonomialBasis b2(6, 2);
    const Form f = wedge(g("mu"), g("theta")) * CycloScalar(5);
    CHECK(b2.form(b2.coordinates(f)) == f);
    CHECK_THROWS_AS(b2.coordinates(g("mu")), PreconditionError);
  }

  TEST_CASE("text form") {
    const Form f = CycloScalar::zeta(9) * wedge(g("mu"), g("~mu")) + wedge(g("nu"), g("theta"));
    CHECK(f.to_string(kGens) == "-z^3*mu^~mu + nu^theta");
    CHECK(Form().to_string(kGens) == "0");
  }
}
