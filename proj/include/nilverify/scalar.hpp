#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_12).
//
// Elements are stored in the power basis {1, z, z^2, z^3} with z = zeta_12 =
// e^{i pi/6}, reduced eagerly by the minimal polynomial z^4 = z^2 - 1. The
// sixth root of unity zeta_6 is z^2 and the imaginary unit is z^3.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

namespace nilverify {

using Rational = mpq_class;

/// num/den in lowest terms; throws DomainError when den == 0.
Rational make_rational(long num, long den);
std::string to_string(const Rational& r);

/// floor(r) as a rational integer.
Rational floor_rational(const Rational& r);

enum class Sign { negative, zero, positive };
std::string to_string(Sign s);

class CycloScalar {
 public:
  static constexpr int kRootOrder = 12;
  static constexpr int kDegree = 4;

  CycloScalar() = default;
  CycloScalar(long n) { coeffs_[0] = n; }  // NOLINT(google-explicit-constructor)
  CycloScalar(const Rational& r) { coeffs_[0] = r; }  // NOLINT
  explicit CycloScalar(const std::array<Rational, kDegree>& coeffs);

  /// zeta_12^k for any integer k.
  static CycloScalar zeta(long k);
  /// zeta_6^k = zeta_12^(2k).
  static CycloScalar zeta6(long k) { return zeta(2 * k); }
  static CycloScalar imaginary_unit() { return zeta(3); }

  const Rational& coefficient(int j) const { return coeffs_.at(j); }
  const std::array<Rational, kDegree>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Integer power; negative exponents invert (DomainError on zero).
  CycloScalar pow(long e) const;

  /// Token form accepted by the expression parser, e.g. "1/3 + 1/3*z^2".
  std::string to_string() const;

 private:
  std::array<Rational, kDegree> coeffs_{};
};

CycloScalar add(const CycloScalar& a, const CycloScalar& b);
CycloScalar mul(const CycloScalar& a, const CycloScalar& b);
/// Multiplicative inverse; DomainError for zero.
CycloScalar inv(const CycloScalar& a);
/// Complex conjugation z -> z^11.
CycloScalar conj(const CycloScalar& a);
/// Field automorphism z -> z^k, k a unit mod 12.
CycloScalar galois(const CycloScalar& a, int k);
/// Absolute norm to Q: product over the four embeddings.
Rational norm(const CycloScalar& a);

/// Exact sign of a totally real element under z = e^{i pi/6}. A real element
/// is p + q*sqrt(3) with sqrt(3) = 2z - z^3. PreconditionError if conj(a) != a.
Sign sign_of_real(const CycloScalar& a);

/// k in [0, 12) with a == zeta_12^k, if a is a 12th root of unity.
std::optional<int> root_of_unity_exponent(const CycloScalar& a);
/// Multiplicative order of a root of unity; nullopt otherwise.
std::optional<int> multiplicative_order(const CycloScalar& a);

/// Total order on coefficient vectors, for deterministic sorting only.
bool lexicographic_less(const CycloScalar& a, const CycloScalar& b);

}  // namespace nilverify
