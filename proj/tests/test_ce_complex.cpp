#include "doctest.h"
#include "nilverify/ce_complex.hpp"
#include "nilverify/error.hpp"
#include "nilverify/expression.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nilverify;

namespace {

const GeneratorSet kGens = GeneratorSet::complex_heisenberg();
Form parse(const char* s) { return parse_form(s, kGens); }

oracle::OForm to_oracle(const Form& f) {
  oracle::OForm out;
  for (const auto& [m, c] : f.terms()) out.emplace(m.bits(), c);
  return out;
}

/// Generators a b c with conjugates; d a = a^b, d b = b^c is not flat.
AlgebraSpec broken_spec() {
  const GeneratorSet gens({"a", "b", "c", "~a", "~b", "~c"}, {{"a", "~a"}, {"b", "~b"}, {"c", "~c"}});
  std::vector<Form> d(6);
  d[0] = parse_form("a^b", gens);
  d[1] = parse_form("b^c", gens);
  d[3] = parse_form("~a^~b", gens);
  d[4] = parse_form("~b^~c", gens);
  return AlgebraSpec(gens, d);
}

}  // namespace

TEST_SUITE("ce_complex") {
  TEST_CASE("differential on generators and products") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    CHECK(differential(spec, parse("theta")) == parse("mu^nu"));
    CHECK(differential(spec, parse("~theta")) == parse("~mu^~nu"));
    CHECK(differential(spec, parse("mu")).is_zero());
    CHECK(differential(spec, parse("theta^~theta")) == parse("mu^nu^~theta - theta^~mu^~nu"));
    CHECK(differential(spec, Form(7)).is_zero());
  }

  TEST_CASE("differential agrees with the oracle on every monomial") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    const oracle::Complex ref = oracle::heisenberg(false);
    for (std::uint32_t m = 0; m < 64; ++m) {
      const Form f = Form::monomial(MultiIndex(m));
      CHECK(to_oracle(differential(spec, f)) == oracle::odiff(ref.dgen, to_oracle(f)));
    }
  }

  TEST_CASE("Betti numbers of the Heisenberg nilmanifold") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    const oracle::Complex ref = oracle::heisenberg(false);
    const std::size_t expected[] = {1, 4, 8, 10, 8, 4, 1};
    for (int k = 0; k <= 6; ++k) {
      const auto h = cohomology(spec, static_cast<std::size_t>(k));
      CHECK(h.dimension() == expected[k]);
      CHECK(h.dimension() == ref.betti(k));
      CHECK(rank(differential_matrix(spec, static_cast<std::size_t>(k))) == ref.rank_d(k));
    }
  }

  TEST_CASE("Betti numbers of the torus are binomial") {
    const AlgebraSpec torus = AlgebraSpec::abelian(kGens);
    const std::size_t expected[] = {1, 6, 15, 20, 15, 6, 1};
    for (std::size_t k = 0; k <= 6; ++k) CHECK(cohomology(torus, k).dimension() == expected[k]);
  }

  TEST_CASE("flatness") {
    CHECK(verify_flatness(AlgebraSpec::complex_heisenberg()).passed);
    const Certificate broken = verify_flatness(broken_spec());
    CHECK_FALSE(broken.passed);
    REQUIRE(broken.witness);
    // d(d a) = d(a^b) = a^b^b - a^(b^c) = -a^b^c
    CHECK(broken.witness->find("d(d a)") != std::string::npos);
    CHECK(broken.witness->find("-a^b^c") != std::string::npos);
  }

  TEST_CASE("spec validation") {
    std::vector<Form> d(6);
    d[2] = parse("mu^nu");
    CHECK_THROWS_AS(AlgebraSpec(kGens, d), PreconditionError);  // missing conjugate differential
    d[5] = parse("~mu^~nu");
    CHECK_NOTHROW(AlgebraSpec(kGens, d));
    d[5] = parse("~mu");
    CHECK_THROWS_AS(AlgebraSpec(kGens, d), PreconditionError);
  }

  TEST_CASE("exactness witnesses") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    const auto exact = exactness_witness(spec, parse("z^3*mu^nu"));
    CHECK(exact.exact);
    CHECK(differential(spec, exact.primitive) == parse("z^3*mu^nu"));
    CHECK(is_zero(exact.class_coordinates));
    const auto closed = exactness_witness(spec, parse("nu^~nu"));
    CHECK_FALSE(closed.exact);
    CHECK_FALSE(is_zero(closed.class_coordinates));
    CHECK_THROWS_AS(exactness_witness(spec, parse("theta")), PreconditionError);
  }

  TEST_CASE("reduction writes a closed form as combination plus exact part") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    testing_support::Random rng(51);
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto h = cohomology(spec, k);
      for (int t = 0; t < 20; ++t) {
        Vector x(h.dimension());
        for (auto& c : x) c = rng.scalar();
        Form closed = h.representative(x);
        if (k > 0) closed += differential(spec, rng.form(6, k - 1));
        const auto red = h.reduce(closed);
        CHECK(red.coordinates == x);
        CHECK(closed - h.representative(red.coordinates) == differential(spec, red.primitive));
      }
    }
  }

  TEST_CASE("cup products") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    const auto h1 = cohomology(spec, 1), h2 = cohomology(spec, 2);
    // [mu] cup [nu] = [d theta] = 0
    const Vector mu = h1.coordinates(parse("mu")), nu = h1.coordinates(parse("nu"));
    CHECK(is_zero(cup(h1, mu, h1, nu, h2)));
    const Vector mubar = h1.coordinates(parse("~mu"));
    CHECK(cup(h1, mu, h1, mubar, h2) == h2.coordinates(parse("mu^~mu")));
    CHECK(cup(spec, 1, mu, 1, mubar) == h2.coordinates(parse("mu^~mu")));
  }

  TEST_CASE("Poincare pairing is nondegenerate in every degree") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    const auto top = cohomology(spec, 6);
    for (std::size_t k = 0; k <= 6; ++k) {
      const Matrix p = cup_pairing(cohomology(spec, k), cohomology(spec, 6 - k), top);
      CHECK(p.rows() == p.cols());
      CHECK_FALSE(determinant(p).is_zero());
    }
  }
}
