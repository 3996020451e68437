#include <string>

#include "doctest.h"
#include "nilverify/config.hpp"
#include "nilverify/error.hpp"
#include "nilverify/expression.hpp"

using namespace nilverify;

namespace {

const std::string kConfigDir = NILVERIFY_CONFIG_DIR;

const std::string kHeader = R"([field]
roots = 12

[generators]
holomorphic = mu nu theta
)";

ConfigError error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("config was accepted");
  throw;
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("shipped configurations") {
    const ManifoldConfig heis = load_config(kConfigDir + "/heisenberg-z6.cfg");
    CHECK(heis.root_order == 12);
    CHECK(heis.algebra.generators() == GeneratorSet::complex_heisenberg());
    const Form* omega = heis.form("omega");
    REQUIRE(omega);
    CHECK(*omega == parse_form("-z^3*mu^~mu + nu^theta + ~nu^~theta", heis.algebra.generators()));
    CHECK(heis.form("beta"));
    CHECK_FALSE(heis.form("gamma"));
    CHECK(heis.action.order() == 6);
    CHECK(heis.action.eigenvalue(5) == CycloScalar::zeta6(1));  // conj(z6^5)
    REQUIRE(heis.lattice);
    const NilmanifoldModel model = heis.model();
    CHECK(model.twist == 1);
    CHECK(model.multipliers == NilmanifoldModel::heisenberg_z6().multipliers);

    const ManifoldConfig torus = load_config(kConfigDir + "/torus-z6.cfg");
    CHECK(torus.model().twist == 0);
    for (std::size_t g = 0; g < 6; ++g) CHECK(torus.algebra.generator_differential(g).is_zero());

    const ManifoldConfig trivial = load_config(kConfigDir + "/trivial-action.cfg");
    CHECK(trivial.action.order() == 1);
  }

  TEST_CASE("defaults") {
    const ManifoldConfig c = parse_config(kHeader + "[algebra]\nd theta = mu^nu\n[action]\nrho nu = z6^2\nrho theta = z6^2\n");
    CHECK(c.algebra.generator_differential(5) == parse_form("~mu^~nu", c.algebra.generators()));
    CHECK(c.action.order() == 3);
    CHECK(c.action.eigenvalue(0) == CycloScalar(1));
    CHECK_FALSE(c.lattice);
    CHECK_THROWS_AS(c.model(), PreconditionError);
  }

  TEST_CASE("empty algebra is abelian") {
    const ManifoldConfig c = parse_config(kHeader + "[algebra]\n");
    for (std::size_t g = 0; g < 6; ++g) CHECK(c.algebra.generator_differential(g).is_zero());
  }

  TEST_CASE("diagnostics") {
    const auto unknown = error_of(kHeader + "[algebra]\nd theta = mu^xi\n");
    CHECK(unknown.kind() == ConfigErrorKind::unknown_generator);
    CHECK(unknown.line() == 7);
    CHECK(unknown.column() == 14);
    CHECK(std::string(unknown.what()).find("line 7, column 14: unknown-generator") == 0);

    const auto not_root = error_of(kHeader + "[action]\nrho mu = 2\n");
    CHECK(not_root.kind() == ConfigErrorKind::non_root_of_unity);
    CHECK(not_root.line() == 7);

    const auto order = error_of(kHeader + "[action]\norder = 4\nrho mu = z6\n");
    CHECK(order.kind() == ConfigErrorKind::order_mismatch);

    const auto flat = error_of(R"([generators]
holomorphic = a b c
[algebra]
d a = a^b
d b = b^c
)");
    CHECK(flat.kind() == ConfigErrorKind::flatness);
    CHECK(flat.message().find("-a^b^c") != std::string::npos);

    const auto eq = error_of(kHeader + "[algebra]\nd theta = mu^nu\n[action]\nrho mu = z6^4\nrho nu = z6\nrho theta = z6^3\n");
    CHECK(eq.kind() == ConfigErrorKind::equivariance);
    CHECK(eq.line() == 11);
    CHECK(eq.message().find("theta") != std::string::npos);

    CHECK(error_of(kHeader + "[bogus]\n").kind() == ConfigErrorKind::unknown_section);
    CHECK(error_of(kHeader + "[action]\ncolour = red\n").kind() == ConfigErrorKind::unknown_key);
    CHECK(error_of(kHeader + "[field]\nroots = 12\n").kind() == ConfigErrorKind::duplicate);
    CHECK(error_of("[field]\nroots = 5\n").kind() == ConfigErrorKind::field);
    CHECK(error_of("[field]\nroots = 6\n[generators]\nholomorphic = mu\n[action]\nrho mu = z^3\n").kind() ==
          ConfigErrorKind::field);
    CHECK(error_of(kHeader + "[algebra]\nd theta = mu^nu\nd ~theta = mu^nu\n").kind() == ConfigErrorKind::conjugation);
    CHECK(error_of(kHeader + "[forms]\nz = mu\n").kind() == ConfigErrorKind::unknown_key);
    CHECK(error_of(kHeader + "[lattice]\ngroup = nilpotent\n").kind() == ConfigErrorKind::lattice);
    CHECK(error_of("[generators\n").kind() == ConfigErrorKind::syntax);
    CHECK(error_of("[generators]\nholomorphic = mu mu\n").kind() == ConfigErrorKind::generators);
  }

  TEST_CASE("missing file") {
    try {
      load_config(kConfigDir + "/missing.cfg");
      FAIL("expected an error");
    } catch (const ConfigError& e) {
      CHECK(e.kind() == ConfigErrorKind::io);
    }
  }
}
