#pragma once

// Independent reference implementations used to cross-check the engine.
// Nothing here calls the engine's exterior algebra, matrices or complexes;
// only CycloScalar arithmetic is shared, and that is itself checked against
// the polynomial oracle below.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nilverify/scalar.hpp"

namespace oracle {

using nilverify::CycloScalar;
using Q = mpq_class;

// ---- Q[z]/(z^4 - z^2 + 1) by schoolbook multiplication ----------------------

using Poly = std::array<Q, 4>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  std::array<Q, 7> raw{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) raw[i + j] += a[i] * b[j];
  // z^k = z^(k-2) - z^(k-4) for k >= 4, from the top down.
  for (int k = 6; k >= 4; --k) {
    raw[k - 2] += raw[k];
    raw[k - 4] -= raw[k];
    raw[k] = 0;
  }
  return {raw[0], raw[1], raw[2], raw[3]};
}

/// a^{-1} by solving the 4x4 rational system (multiplication by a) x = 1.
inline std::optional<Poly> poly_inverse(const Poly& a) {
  std::array<std::array<Q, 5>, 4> m{};
  for (int col = 0; col < 4; ++col) {
    Poly e{};
    e[col] = 1;
    const Poly p = poly_mul(a, e);
    for (int row = 0; row < 4; ++row) m[row][col] = p[row];
  }
  m[0][4] = 1;
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(m[c], m[piv]);
    for (int r = 0; r < 4; ++r)
      if (r != c && m[r][c] != 0) {
        const Q f = m[r][c] / m[c][c];
        for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
      }
  }
  Poly x;
  for (int r = 0; r < 4; ++r) x[r] = m[r][4] / m[r][r];
  return x;
}

inline Poly to_poly(const CycloScalar& a) { return a.coefficients(); }
inline CycloScalar from_poly(const Poly& p) { return CycloScalar(p); }

// ---- Exterior algebra on bit masks -----------------------------------------

using Mono = std::uint32_t;
using OForm = std::map<Mono, CycloScalar>;

/// (-1)^(number of pairs i in a, j in b with i > j); 0 on overlap.
inline int inversion_sign(Mono a, Mono b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int i = 0; i < 32; ++i)
    if ((a >> i) & 1u)
      for (int j = 0; j < i; ++j)
        if ((b >> j) & 1u) ++inversions;
  return inversions % 2 ? -1 : 1;
}

inline void add_to(OForm& f, Mono m, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto it = f.find(m);
  if (it == f.end()) {
    f.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

inline OForm owedge(const OForm& a, const OForm& b) {
  OForm out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const int s = inversion_sign(ma, mb);
      if (s) add_to(out, ma | mb, CycloScalar(s) * ca * cb);
    }
  return out;
}

inline OForm oscale(OForm a, const CycloScalar& c) {
  OForm out;
  for (auto& [m, x] : a) add_to(out, m, x * c);
  return out;
}

inline OForm oadd(OForm a, const OForm& b) {
  for (const auto& [m, c] : b) add_to(a, m, c);
  return a;
}

/// d on monomials: d(e_i1 ^ ... ^ e_ik) = sum (-1)^j e_i1 ^ .. d(e_ij) .. ^ e_ik.
inline OForm odiff(const std::vector<OForm>& dgen, const OForm& a) {
  OForm out;
  for (const auto& [m, c] : a) {
    int before = 0;
    for (int i = 0; i < 32; ++i) {
      if (!((m >> i) & 1u)) continue;
      const Mono lower = m & ((1u << i) - 1u);
      const Mono upper = m & ~((1u << (i + 1)) - 1u);
      OForm left{{lower, CycloScalar(1)}}, right{{upper, CycloScalar(1)}};
      OForm term = owedge(owedge(left, dgen[i]), right);
      out = oadd(out, oscale(term, CycloScalar(before % 2 ? -c : c)));
      ++before;
    }
  }
  return out;
}

inline std::vector<Mono> monomials(int n, int k) {
  std::vector<Mono> out;
  for (Mono m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

// ---- Dense elimination over CycloScalar --------------------------------------

using Mat = std::vector<std::vector<CycloScalar>>;  // rows

inline std::size_t orank(Mat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < m.size(); ++i)
      if (!m[i][c].is_zero()) {
        const CycloScalar f = m[i][c] / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      }
    ++r;
  }
  return r;
}

/// Kernel basis of the linear map whose columns are `cols` (each of length rows).
inline std::vector<std::vector<CycloScalar>> okernel(const Mat& cols, std::size_t rows) {
  const std::size_t n = cols.size();
  Mat m(rows, std::vector<CycloScalar>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const CycloScalar inv = CycloScalar(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && !m[i][c].is_zero()) {
        const CycloScalar f = m[i][c];
        for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[r][k];
      }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<CycloScalar>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<CycloScalar> v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    out.push_back(v);
  }
  return out;
}

inline std::vector<CycloScalar> coords(const OForm& f, const std::vector<Mono>& basis) {
  std::vector<CycloScalar> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = f.find(basis[i]);
    if (it != f.end()) v[i] = it->second;
  }
  return v;
}

/// Complex restricted to the monomials accepted by `keep` (all, or invariant ones).
struct Complex {
  int n;
  std::vector<OForm> dgen;
  std::vector<CycloScalar> weights;  // per generator; empty = no restriction

  bool keep(Mono m) const {
    if (weights.empty()) return true;
    CycloScalar w(1);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1u) w *= weights[i];
    return w.is_one();
  }
  std::vector<Mono> basis(int k) const {
    std::vector<Mono> out;
    if (k < 0 || k > n) return out;
    for (auto m : monomials(n, k))
      if (keep(m)) out.push_back(m);
    return out;
  }
  Mat d_columns(int k) const {
    Mat cols;
    const auto target = monomials(n, k + 1);
    for (auto m : basis(k)) cols.push_back(coords(odiff(dgen, {{m, CycloScalar(1)}}), target));
    return cols;
  }
  std::size_t rank_d(int k) const {
    if (k < 0 || k >= n) return 0;
    const Mat cols = d_columns(k);
    if (cols.empty()) return 0;
    return orank(cols);
  }
  std::size_t betti(int k) const { return basis(k).size() - rank_d(k) - rank_d(k - 1); }

  /// Closed k-forms (basis of the kernel of d_k) as forms.
  std::vector<OForm> cocycles(int k) const {
    const auto b = basis(k);
    std::vector<OForm> out;
    if (k == n) {
      for (auto m : b) out.push_back({{m, CycloScalar(1)}});
      return out;
    }
    for (const auto& v : okernel(d_columns(k), monomials(n, k + 1).size())) {
      OForm f;
      for (std::size_t i = 0; i < v.size(); ++i) add_to(f, b[i], v[i]);
      out.push_back(f);
    }
    return out;
  }
  /// Exact k-forms: images of the (k-1)-basis.
  std::vector<OForm> coboundaries(int k) const {
    std::vector<OForm> out;
    for (auto m : basis(k - 1)) out.push_back(odiff(dgen, {{m, CycloScalar(1)}}));
    return out;
  }
};

/// Heisenberg structure (mu, nu, theta, ~mu, ~nu, ~theta): d theta = mu^nu, d ~theta = ~mu^~nu.
inline Complex heisenberg(bool invariant_only, bool flat = false) {
  Complex c{6, std::vector<OForm>(6), {}};
  if (!flat) {
    c.dgen[2] = {{0b000011u, CycloScalar(1)}};
    c.dgen[5] = {{0b011000u, CycloScalar(1)}};
  }
  if (invariant_only) {
    const CycloScalar a = CycloScalar::zeta6(4), b = CycloScalar::zeta6(1), t = CycloScalar::zeta6(5);
    c.weights = {a, b, t, nilverify::conj(a), nilverify::conj(b), nilverify::conj(t)};
  }
  return c;
}

/// rank of the span of `forms` modulo `modulo`, inside degree-k monomials of n generators.
inline std::size_t rank_mod(const std::vector<OForm>& forms, const std::vector<OForm>& modulo, int n, int k) {
  const auto b = monomials(n, k);
  Mat all, base;
  for (const auto& f : modulo) {
    all.push_back(coords(f, b));
    base.push_back(coords(f, b));
  }
  for (const auto& f : forms) all.push_back(coords(f, b));
  return orank(all) - (base.empty() ? 0 : orank(base));
}

}  // namespace oracle
