#pragma once

// Seeded random inputs shared by the unit, property and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>

#include "nilverify/exterior.hpp"
#include "nilverify/fixed_locus.hpp"
#include "nilverify/scalar.hpp"

namespace testing_support {

using namespace nilverify;

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long max_num = 6, long max_den = 4) {
    return make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  CycloScalar scalar() {
    std::array<Rational, 4> c;
    for (auto& x : c) x = coin() ? rational() : Rational(0);
    return CycloScalar(c);
  }

  CycloScalar nonzero_scalar() {
    for (;;) {
      CycloScalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }

  /// Element of Q(zeta6) with denominators dividing 12.
  CycloScalar sixth_field_scalar() {
    return CycloScalar(make_rational(integer(-30, 30), 12)) +
           CycloScalar(make_rational(integer(-30, 30), 12)) * CycloScalar::zeta6(1);
  }

  CycloScalar lattice_scalar() { return CycloScalar(integer(-4, 4)) + CycloScalar(integer(-4, 4)) * CycloScalar::zeta6(1); }

  HeisPoint point() { return {sixth_field_scalar(), sixth_field_scalar(), sixth_field_scalar()}; }
  HeisPoint lattice_point() { return {lattice_scalar(), lattice_scalar(), lattice_scalar()}; }

  /// Homogeneous form of degree k on n generators with up to `terms` terms.
  Form form(std::size_t n, std::size_t k, int terms = 3) {
    Form f;
    for (int t = 0; t < terms; ++t) {
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < n; ++i) pos.push_back(i);
      std::shuffle(pos.begin(), pos.end(), gen_);
      pos.resize(k);
      std::sort(pos.begin(), pos.end());
      f += Form::monomial(MultiIndex::from_positions(pos), scalar());
    }
    return f;
  }

  /// Mixed-degree form.
  Form any_form(std::size_t n) {
    Form f;
    for (int t = 0; t < 3; ++t) f += form(n, static_cast<std::size_t>(integer(0, static_cast<long>(n))), 1);
    return f;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing_support
