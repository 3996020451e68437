#include "doctest.h"
#include "properties.hpp"

namespace {

void check(const properties::Result& r) {
  INFO(r.name << ": " << r.counterexample.value_or(""));
  CHECK(r.cases >= 1000);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("field axioms") { check(properties::field_axioms()); }
  TEST_CASE("conjugation") { check(properties::conjugation()); }
  TEST_CASE("norm") { check(properties::norm_positivity()); }
  TEST_CASE("wedge associativity") { check(properties::wedge_associativity()); }
  TEST_CASE("graded commutativity") { check(properties::graded_commutativity()); }
  TEST_CASE("conj_form") { check(properties::conj_form_homomorphism()); }
  TEST_CASE("Leibniz rule") { check(properties::leibniz()); }
  TEST_CASE("d squared") { check(properties::d_squared()); }
  TEST_CASE("cup representative independence") { check(properties::cup_independence()); }
  TEST_CASE("Poincare pairing") { check(properties::poincare_pairing()); }
  TEST_CASE("action automorphism") { check(properties::action_automorphism()); }
  TEST_CASE("group_mul associativity") { check(properties::group_associativity()); }
  TEST_CASE("rho automorphism") { check(properties::rho_automorphism()); }
  TEST_CASE("normalize cosets") { check(properties::normalize_invariance()); }
}
