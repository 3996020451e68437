#include "nilverify/geometry.hpp"

#include <array>

#include "nilverify/error.hpp"

namespace nilverify {

std::string to_string(Orientation o) { return o == Orientation::standard ? "standard" : "flipped"; }

Form reference_volume(const GeneratorSet& gens, Orientation orientation) {
  Form v(1);
  for (auto g : gens.holomorphic()) {
    const Form area = CycloScalar::imaginary_unit() * wedge(Form::generator(g), Form::generator(gens.partner(g)));
    v = wedge(v, area);
  }
  return orientation == Orientation::standard ? v : -v;
}

namespace {

MultiIndex top_monomial(std::size_t n) { return MultiIndex(n == 32 ? ~0u : (1u << n) - 1u); }

Form power(const Form& f, std::size_t k) {
  Form out(1);
  for (std::size_t i = 0; i < k; ++i) out = wedge(out, f);
  return out;
}

}  // namespace

SymplecticCertificate check_symplectic(const AlgebraSpec& spec, const ActionSpec& action, const Form& omega,
                                       Orientation orientation) {
  if (!omega.is_zero() && omega.degree() != std::optional<std::size_t>(2))
    throw PreconditionError("check_symplectic: omega must be a 2-form");
  const auto& gens = spec.generators();
  SymplecticCertificate cert;

  const Form defect = omega - conj_form(gens, omega);
  cert.real = defect.is_zero();
  cert.checks.record("conj(omega) = omega", cert.real, cert.real ? "" : "omega - conj(omega) = " + defect.to_string(gens));

  const Form d = differential(spec, omega);
  cert.closed = d.is_zero();
  cert.checks.record("d omega = 0", cert.closed, cert.closed ? "" : "d omega = " + d.to_string(gens));

  const Form moved = act(action, 1, omega) - omega;
  cert.invariant = moved.is_zero();
  cert.checks.record("rho^* omega = omega", cert.invariant,
                     cert.invariant ? "" : "rho^* omega - omega = " + moved.to_string(gens));

  const std::size_t n = spec.dimension();
  const MultiIndex top = top_monomial(n);
  const Form volume = reference_volume(gens, orientation);
  const Form top_power = power(omega, n / 2);
  cert.top_coefficient = top_power.coefficient(top) / volume.coefficient(top);
  const bool nondegenerate = !cert.top_coefficient.is_zero();
  cert.checks.record("omega^" + std::to_string(n / 2) + " != 0", nondegenerate,
                     "omega^" + std::to_string(n / 2) + " = " + cert.top_coefficient.to_string() + " * V");
  if (conj(cert.top_coefficient) == cert.top_coefficient) cert.sign = sign_of_real(cert.top_coefficient);
  const bool positive = cert.sign == Sign::positive;
  cert.checks.record("omega^" + std::to_string(n / 2) + " > 0 (" + to_string(orientation) + " orientation)", positive,
                     cert.sign ? "sign " + to_string(*cert.sign) : "coefficient is not real");
  return cert;
}

Certificate check_integrability(const AlgebraSpec& spec) {
  Certificate cert("integrability");
  const auto& gens = spec.generators();
  for (auto g : gens.holomorphic()) {
    const auto split = bidegree_split(gens, spec.generator_differential(g));
    const auto it = split.find({0, 2});
    const bool ok = it == split.end() || it->second.is_zero();
    cert.record("d " + gens.name(g) + " has no (0,2) part", ok,
                ok ? "" : "(0,2) part of d " + gens.name(g) + " = " + it->second.to_string(gens));
  }
  return cert;
}

InvariantRing::InvariantRing(const AlgebraSpec& spec, const ActionSpec& action, Orientation orientation)
    : spec_(spec), action_(action) {
  for (std::size_t k = 0; k <= spec_.dimension(); ++k) bases_.push_back(invariant_cohomology(spec_, action_, k));
  const auto& top = bases_.back();
  const Form v = reference_volume(spec_.generators(), orientation);
  if (top.dimension() != 1) throw PreconditionError("invariant top cohomology is not one-dimensional");
  volume_class_ = top.coordinates(v)[0];
  if (volume_class_.is_zero()) throw PreconditionError("reference volume is exact");
}

std::vector<std::size_t> InvariantRing::betti() const {
  std::vector<std::size_t> out;
  for (const auto& b : bases_) out.push_back(b.dimension());
  return out;
}

CycloScalar InvariantRing::volume_coefficient(const Form& top) const {
  return bases_.back().coordinates(top)[0] / volume_class_;
}

CycloScalar InvariantRing::triple_product(const Vector& x, const Vector& y, const Vector& z) const {
  if (spec_.dimension() != 6) throw PreconditionError("triple products need six generators");
  const auto& h2 = bases_.at(2);
  return volume_coefficient(wedge(wedge(h2.representative(x), h2.representative(y)), h2.representative(z)));
}

Matrix InvariantRing::h2_pairing() const {
  const std::size_t n = spec_.dimension();
  if (n < 4) throw PreconditionError("h2 pairing needs at least four generators");
  const auto& h2 = bases_.at(2);
  const auto& hn2 = bases_.at(n - 2);
  Matrix m(h2.dimension(), hn2.dimension());
  for (std::size_t a = 0; a < h2.dimension(); ++a)
    for (std::size_t b = 0; b < hn2.dimension(); ++b)
      m(a, b) = volume_coefficient(wedge(h2.representatives()[a], hn2.representatives()[b]));
  return m;
}

LefschetzReport lefschetz_report(const InvariantRing& ring, const Vector& omega_class) {
  const std::size_t n = ring.top_degree();
  if (n < 4 || n % 2 != 0) throw PreconditionError("lefschetz_report: needs an even number >= 4 of generators");
  const auto& h2 = ring.degree(2);
  const auto& target = ring.degree(n - 2);
  if (omega_class.size() != h2.dimension()) throw PreconditionError("lefschetz_report: omega has wrong coordinate count");

  LefschetzReport r;
  r.omega_class = omega_class;
  r.h2_dimension = h2.dimension();
  const Form omega_power = power(h2.representative(omega_class), n / 2 - 2);
  std::vector<Vector> cols;
  for (const auto& a : h2.representatives()) cols.push_back(target.coordinates(wedge(omega_power, a)));
  r.map = Matrix::from_columns(target.dimension(), cols);
  r.rank = rank(r.map);
  r.kernel = nullspace(r.map);
  r.lefschetz_holds = h2.dimension() == target.dimension() && r.rank == h2.dimension();

  if (n == 6) {
    const std::size_t m = h2.dimension();
    auto unit = [m](std::size_t i) {
      Vector e(m);
      e[i] = 1;
      return e;
    };
    r.triple_products.resize(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j)
        for (std::size_t k = j; k < m; ++k) {
          const CycloScalar t = ring.triple_product(unit(i), unit(j), unit(k));
          // Degree-2 classes commute, so T is symmetric; fill all permutations.
          for (auto [a, b, c] : {std::array{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}})
            r.triple_products[(a * m + b) * m + c] = t;
        }
  }
  return r;
}

LefschetzReport lefschetz_report(const AlgebraSpec& spec, const ActionSpec& action, const Vector& omega_class) {
  return lefschetz_report(InvariantRing(spec, action), omega_class);
}

KernelCertificate universal_kernel_certificate(const InvariantRing& ring, const Vector& beta) {
  const auto& h2 = ring.degree(2);
  if (beta.size() != h2.dimension()) throw PreconditionError("universal_kernel_certificate: wrong coordinate count");
  if (is_zero(beta)) throw PreconditionError("universal_kernel_certificate: beta must be a nonzero class");
  KernelCertificate cert;
  cert.beta = beta;
  const std::size_t m = h2.dimension();
  auto unit = [m](std::size_t i) {
    Vector e(m);
    e[i] = 1;
    return e;
  };
  const auto& gens = ring.spec().generators();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const CycloScalar t = ring.triple_product(beta, unit(i), unit(j));
      ++cert.products_checked;
      const bool ok = t.is_zero();
      if (!ok && !cert.witness_pair) cert.witness_pair = std::pair{i, j};
      cert.checks.record("T(beta, [" + h2.representatives()[i].to_string(gens) + "], [" +
                             h2.representatives()[j].to_string(gens) + "]) = 0",
                         ok, ok ? "" : "T = " + t.to_string());
    }
  const Matrix pairing = ring.h2_pairing();
  cert.pairing_determinant = pairing.rows() == pairing.cols() ? determinant(pairing) : CycloScalar(0);
  cert.checks.record("H^2 x H^4 cup pairing is nondegenerate", !cert.pairing_determinant.is_zero(),
                     "det = " + cert.pairing_determinant.to_string());
  return cert;
}

KernelCertificate universal_kernel_certificate(const AlgebraSpec& spec, const ActionSpec& action, const Vector& beta) {
  return universal_kernel_certificate(InvariantRing(spec, action), beta);
}

std::vector<Vector> universal_kernel_search(const InvariantRing& ring) {
  const std::size_t m = ring.degree(2).dimension();
  auto unit = [m](std::size_t i) {
    Vector e(m);
    e[i] = 1;
    return e;
  };
  // Row (i,j,k): T(e_k, a_i, a_j); beta ranges over columns.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Vector row(m);
      for (std::size_t k = 0; k < m; ++k) row[k] = ring.triple_product(unit(k), unit(i), unit(j));
      rows.push_back(std::move(row));
    }
  Matrix system(rows.size(), m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m; ++c) system(r, c) = rows[r][c];
  return nullspace(system);
}

}  // namespace nilverify
