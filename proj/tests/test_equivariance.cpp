#include "doctest.h"
#include "nilverify/equivariance.hpp"
#include "nilverify/error.hpp"
#include "nilverify/expression.hpp"
#include "oracle.hpp"

using namespace nilverify;

namespace {

const GeneratorSet kGens = GeneratorSet::complex_heisenberg();
Form parse(const char* s) { return parse_form(s, kGens); }

ActionSpec broken_action() {
  const CycloScalar a = CycloScalar::zeta6(4), b = CycloScalar::zeta6(1), t = CycloScalar::zeta6(3);
  return ActionSpec(6, {a, b, t, conj(a), conj(b), conj(t)}, kGens);
}

}  // namespace

TEST_SUITE("equivariance") {
  TEST_CASE("action on forms") {
    const ActionSpec rho = ActionSpec::heisenberg_z6();
    CHECK(act(rho, 1, parse("mu")) == CycloScalar::zeta6(4) * parse("mu"));
    CHECK(act(rho, 1, parse("nu^~nu")) == parse("nu^~nu"));
    CHECK(act(rho, 1, parse("nu^theta")) == parse("nu^theta"));
    CHECK(act(rho, 1, parse("mu^nu")) == CycloScalar::zeta6(5) * parse("mu^nu"));
    CHECK(act(rho, -1, act(rho, 1, parse("mu^theta + ~nu"))) == parse("mu^theta + ~nu"));
    CHECK(act(rho, 6, parse("theta")) == parse("theta"));
    CHECK(average(rho, parse("mu + mu^~mu")) == parse("mu^~mu"));
  }

  TEST_CASE("action validation") {
    const CycloScalar w = CycloScalar::zeta6(1);
    CHECK_THROWS_AS(ActionSpec(6, {CycloScalar(2), w, w, CycloScalar(1), conj(w), conj(w)}, kGens), PreconditionError);
    CHECK_THROWS_AS(ActionSpec(3, {w, w, w, conj(w), conj(w), conj(w)}, kGens), PreconditionError);
    CHECK_THROWS_AS(ActionSpec(6, {w, w, w, w, conj(w), conj(w)}, kGens), PreconditionError);
  }

  TEST_CASE("equivariance certificate") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    CHECK(verify_equivariance(spec, ActionSpec::heisenberg_z6()).passed);
    CHECK(verify_equivariance(spec, ActionSpec::trivial(kGens)).passed);
    const Certificate bad = verify_equivariance(spec, broken_action());
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.witness);
    CHECK(bad.witness->find("rho^* d theta = d rho^* theta") == 0);
  }

  TEST_CASE("invariant cohomology agrees with the invariant subcomplex") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    const ActionSpec rho = ActionSpec::heisenberg_z6();
    const oracle::Complex ref = oracle::heisenberg(true);
    const std::size_t expected[] = {1, 0, 4, 0, 4, 0, 1};
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto a = invariant_cohomology(spec, rho, k), b = invariant_cohomology_by_averaging(spec, rho, k);
      CHECK(a.dimension() == expected[k]);
      CHECK(b.dimension() == expected[k]);
      CHECK(a.dimension() == ref.betti(static_cast<int>(k)));
      for (const auto& r : a.representatives()) CHECK(act(rho, 1, r) == r);
    }
  }

  TEST_CASE("trivial action leaves all of H^*") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    for (std::size_t k = 0; k <= 6; ++k)
      CHECK(invariant_cohomology(spec, ActionSpec::trivial(kGens), k).dimension() == cohomology(spec, k).dimension());
  }

  TEST_CASE("induced action has order dividing 6") {
    const AlgebraSpec spec = AlgebraSpec::complex_heisenberg();
    const ActionSpec rho = ActionSpec::heisenberg_z6();
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto h = cohomology(spec, k);
      const Matrix m = induced_action_matrix(h, rho);
      Matrix p = Matrix::identity(h.dimension());
      for (int i = 0; i < 6; ++i) p = p * m;
      CHECK(p == Matrix::identity(h.dimension()));
      CHECK(induced_action_matrix(h, rho, 6) == Matrix::identity(h.dimension()));
      // Trace of the average = dimension of the invariant part.
      CycloScalar trace;
      for (long j = 0; j < 6; ++j) {
        const Matrix mj = induced_action_matrix(h, rho, j);
        for (std::size_t i = 0; i < h.dimension(); ++i) trace += mj(i, i);
      }
      CHECK(trace / CycloScalar(6) == CycloScalar(static_cast<long>(invariant_cohomology(spec, rho, k).dimension())));
    }
  }

  TEST_CASE("incompatible action is rejected for invariants") {
    CHECK_THROWS_AS(invariant_cohomology(AlgebraSpec::complex_heisenberg(), broken_action(), 2), PreconditionError);
  }
}
