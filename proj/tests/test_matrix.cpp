#include "doctest.h"
#include "nilverify/matrix.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nilverify;

namespace {

Matrix random_matrix(testing_support::Random& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.integer(0, 2) ? rng.scalar() : CycloScalar();
  return m;
}

oracle::Mat rows_of(const Matrix& m) {
  oracle::Mat out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("rank and kernel of a small matrix") {
    Matrix m(2, 3);
    m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
    m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
    CHECK(rank(m) == 1);
    const auto k = nullspace(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero(m.apply(v)));
    CHECK(k[0] == Vector{-2, 1, 0});
    CHECK(k[1] == Vector{-3, 0, 1});
  }

  TEST_CASE("rank agrees with independent elimination") {
    testing_support::Random rng(21);
    for (int t = 0; t < 200; ++t) {
      const auto r = static_cast<std::size_t>(rng.integer(1, 5)), c = static_cast<std::size_t>(rng.integer(1, 5));
      Matrix m = random_matrix(rng, r, c);
      if (rng.coin() && r > 1)  // force a dependent row
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * CycloScalar::zeta(5);
      CHECK(rank(m) == oracle::orank(rows_of(m)));
      const auto k = nullspace(m);
      CHECK(k.size() + rank(m) == c);
      for (const auto& v : k) CHECK(is_zero(m.apply(v)));
    }
  }

  TEST_CASE("solve, inverse, determinant") {
    testing_support::Random rng(22);
    for (int t = 0; t < 100; ++t) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 4));
      const Matrix a = random_matrix(rng, n, n);
      const CycloScalar det = determinant(a);
      const auto ainv = inverse(a);
      CHECK(det.is_zero() == !ainv.has_value());
      CHECK((rank(a) == n) == !det.is_zero());
      if (ainv) {
        CHECK(a * *ainv == Matrix::identity(n));
        CHECK(determinant(*ainv) * det == CycloScalar(1));
        Vector b(n);
        for (auto& x : b) x = rng.scalar();
        const auto x = solve(a, b);
        REQUIRE(x);
        CHECK(a.apply(*x) == b);
      }
    }
    Matrix singular(2, 2);
    singular(0, 0) = 1;
    CHECK_FALSE(solve(singular, Vector{0, 1}));
    CHECK(determinant(Matrix::identity(3)) == CycloScalar(1));
  }

  TEST_CASE("determinant changes sign under a row swap") {
    Matrix a(2, 2);
    a(0, 0) = CycloScalar::zeta(1), a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 4;
    Matrix b(2, 2);
    b(0, 0) = 3, b(0, 1) = 4, b(1, 0) = CycloScalar::zeta(1), b(1, 1) = 2;
    CHECK(determinant(a) == CycloScalar(4) * CycloScalar::zeta(1) - CycloScalar(6));
    CHECK(determinant(b) == -determinant(a));
  }

  TEST_CASE("echelon span") {
    EchelonSpan s(3);
    CHECK(s.insert({1, 0, 1}));
    CHECK(s.insert({0, 1, 1}));
    CHECK_FALSE(s.insert({1, 1, 2}));
    CHECK(s.contains({CycloScalar::zeta(1), 0, CycloScalar::zeta(1)}));
    CHECK_FALSE(s.contains({0, 0, 1}));
    CHECK(s.dimension() == 2);
  }
}
