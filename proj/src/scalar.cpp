#include "nilverify/scalar.hpp"

#include "nilverify/error.hpp"

namespace nilverify {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational floor_rational(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

CycloScalar::CycloScalar(const std::array<Rational, kDegree>& coeffs) : coeffs_(coeffs) {
  for (auto& c : coeffs_) c.canonicalize();
}

namespace {

const std::array<CycloScalar, CycloScalar::kRootOrder>& zeta_table() {
  static const auto table = [] {
    std::array<CycloScalar, CycloScalar::kRootOrder> t;
    std::array<Rational, CycloScalar::kDegree> z{0, 1, 0, 0};
    t[0] = CycloScalar(1);
    const CycloScalar step(z);
    for (int k = 1; k < CycloScalar::kRootOrder; ++k) t[k] = mul(t[k - 1], step);
    return t;
  }();
  return table;
}

}  // namespace

CycloScalar CycloScalar::zeta(long k) {
  long r = k % kRootOrder;
  if (r < 0) r += kRootOrder;
  return zeta_table()[static_cast<std::size_t>(r)];
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  return coeffs_[0] == 1 && coeffs_[1] == 0 && coeffs_[2] == 0 && coeffs_[3] == 0;
}

bool CycloScalar::is_rational() const {
  return coeffs_[1] == 0 && coeffs_[2] == 0 && coeffs_[3] == 0;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  for (int j = 0; j < kDegree; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  for (int j = 0; j < kDegree; ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  std::array<Rational, 2 * kDegree - 1> p{};
  for (int i = 0; i < kDegree; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < kDegree; ++j) {
      if (o.coeffs_[j] == 0) continue;
      p[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  // z^d = z^(d-2) - z^(d-4)
  for (int d = 2 * kDegree - 2; d >= kDegree; --d) {
    if (p[d] == 0) continue;
    p[d - 2] += p[d];
    p[d - 4] -= p[d];
  }
  for (int j = 0; j < kDegree; ++j) coeffs_[j] = p[j];
  return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this *= inv(o); }

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inv(*this).pow(-e);
  CycloScalar result(1);
  CycloScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string CycloScalar::to_string() const {
  std::string out;
  for (int j = 0; j < kDegree; ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    std::string term;
    if (j == 0) {
      term = nilverify::to_string(c);
    } else {
      const std::string power = j == 1 ? "z" : "z^" + std::to_string(j);
      if (c == 1)
        term = power;
      else if (c == -1)
        term = "-" + power;
      else
        term = nilverify::to_string(c) + "*" + power;
    }
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

CycloScalar add(const CycloScalar& a, const CycloScalar& b) { return a + b; }
CycloScalar mul(const CycloScalar& a, const CycloScalar& b) { return a * b; }

CycloScalar galois(const CycloScalar& a, int k) {
  if (k % 2 == 0 || k % 3 == 0) throw DomainError("galois: exponent must be a unit mod 12");
  CycloScalar r;
  for (int j = 0; j < CycloScalar::kDegree; ++j) {
    if (a.coefficient(j) == 0) continue;
    r += CycloScalar(a.coefficient(j)) * CycloScalar::zeta(static_cast<long>(j) * k);
  }
  return r;
}

CycloScalar conj(const CycloScalar& a) {
  // z -> z^11 = z - z^3, z^2 -> 1 - z^2, z^3 -> -z^3
  const auto& c = a.coefficients();
  return CycloScalar(std::array<Rational, 4>{c[0] + c[2], c[1], -c[2], -c[1] - c[3]});
}

Rational norm(const CycloScalar& a) {
  const CycloScalar n = a * galois(a, 5) * galois(a, 7) * galois(a, 11);
  if (!n.is_rational()) throw InternalError("norm: product of conjugates is not rational");
  return n.coefficient(0);
}

CycloScalar inv(const CycloScalar& a) {
  if (a.is_zero()) throw DomainError("inv: division by zero");
  const CycloScalar cofactor = galois(a, 5) * galois(a, 7) * galois(a, 11);
  const CycloScalar n = a * cofactor;
  if (!n.is_rational()) throw InternalError("inv: norm is not rational");
  return cofactor * CycloScalar(Rational(1) / n.coefficient(0));
}

Sign sign_of_real(const CycloScalar& a) {
  if (!(conj(a) == a))
    throw PreconditionError("sign_of_real: element " + a.to_string() + " is not real");
  // Real elements have c2 = 0 and c3 = -c1/2, i.e. a = c0 + (c1/2)*sqrt(3).
  const Rational p = a.coefficient(0);
  const Rational q = a.coefficient(1) / 2;
  const int sp = sgn(p);
  const int sq = sgn(q);
  if (sp == 0 && sq == 0) return Sign::zero;
  if (sp >= 0 && sq >= 0) return Sign::positive;
  if (sp <= 0 && sq <= 0) return Sign::negative;
  // Opposite signs: the larger of p^2 and 3q^2 wins.
  const int cmp_sq = cmp(p * p, 3 * q * q);
  if (cmp_sq == 0) return Sign::zero;  // unreachable: sqrt(3) is irrational
  const int s = cmp_sq > 0 ? sp : sq;
  return s > 0 ? Sign::positive : Sign::negative;
}

std::optional<int> root_of_unity_exponent(const CycloScalar& a) {
  for (int k = 0; k < CycloScalar::kRootOrder; ++k)
    if (CycloScalar::zeta(k) == a) return k;
  return std::nullopt;
}

std::optional<int> multiplicative_order(const CycloScalar& a) {
  const auto k = root_of_unity_exponent(a);
  if (!k) return std::nullopt;
  for (int d = 1; d <= CycloScalar::kRootOrder; ++d)
    if ((*k * d) % CycloScalar::kRootOrder == 0) return d;
  return std::nullopt;
}

bool lexicographic_less(const CycloScalar& a, const CycloScalar& b) {
  for (int j = 0; j < CycloScalar::kDegree; ++j) {
    const int c = cmp(a.coefficient(j), b.coefficient(j));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace nilverify
