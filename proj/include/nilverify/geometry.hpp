#pragma once

// Certificates for the invariant symplectic form, the integrability of the
// invariant complex structure, and the Lefschetz map on invariant cohomology.

#include <optional>
#include <vector>

#include "nilverify/equivariance.hpp"

namespace nilverify {

enum class Orientation { standard, flipped };
std::string to_string(Orientation o);

/// prod over (1,0) generators g of (i g^~g), negated for `flipped`.
Form reference_volume(const GeneratorSet& gens, Orientation orientation);

struct SymplecticCertificate {
  Certificate checks{"symplectic"};
  bool real = false;
  bool closed = false;
  bool invariant = false;
  /// omega^(n/2) = top_coefficient * V.
  CycloScalar top_coefficient;
  /// Exact sign of top_coefficient; nullopt when it is not real.
  std::optional<Sign> sign;

  bool valid() const { return real && closed && sign == Sign::positive; }
};

/// PreconditionError unless omega is a homogeneous 2-form (or zero).
SymplecticCertificate check_symplectic(const AlgebraSpec& spec, const ActionSpec& action, const Form& omega,
                                       Orientation orientation = Orientation::standard);

/// No (0,2) component in d g for any (1,0) generator g.
Certificate check_integrability(const AlgebraSpec& spec);

/// Invariant cohomology in every degree plus the normalisation of the top
/// class against the reference volume.
class InvariantRing {
 public:
  InvariantRing(const AlgebraSpec& spec, const ActionSpec& action, Orientation orientation = Orientation::standard);

  const AlgebraSpec& spec() const { return spec_; }
  const ActionSpec& action() const { return action_; }
  const CohomologyBasis& degree(std::size_t k) const { return bases_.at(k); }
  std::size_t top_degree() const { return spec_.dimension(); }
  std::vector<std::size_t> betti() const;

  /// Coefficient of a top-degree closed form against [V]. PreconditionError if
  /// the top invariant cohomology is not spanned by [V].
  CycloScalar volume_coefficient(const Form& top) const;
  /// T(x,y,z) = [x^y^z] / [V] for invariant 2-class coordinates (6 generators).
  CycloScalar triple_product(const Vector& x, const Vector& y, const Vector& z) const;
  /// Cup pairing H^2 x H^(n-2) -> H^n, normalised by [V].
  Matrix h2_pairing() const;

 private:
  AlgebraSpec spec_;
  ActionSpec action_;
  std::vector<CohomologyBasis> bases_;
  CycloScalar volume_class_;
};

struct LefschetzReport {
  Vector omega_class;
  /// Columns are L([a_i]) in the invariant H^(n-2) basis.
  Matrix map;
  std::size_t rank = 0;
  std::vector<Vector> kernel;
  /// T[i][j][k] flattened as i*m*m + j*m + k; empty unless there are 6 generators.
  std::vector<CycloScalar> triple_products;
  std::size_t h2_dimension = 0;
  bool lefschetz_holds = false;

  const CycloScalar& triple(std::size_t i, std::size_t j, std::size_t k) const {
    return triple_products.at((i * h2_dimension + j) * h2_dimension + k);
  }
};

/// L = cup with [omega]^(n/2 - 2) from invariant H^2 to invariant H^(n-2).
LefschetzReport lefschetz_report(const InvariantRing& ring, const Vector& omega_class);
LefschetzReport lefschetz_report(const AlgebraSpec& spec, const ActionSpec& action, const Vector& omega_class);

struct KernelCertificate {
  Certificate checks{"universal kernel"};
  Vector beta;
  /// det of the H^2 x H^4 cup pairing; nonzero means nondegenerate.
  CycloScalar pairing_determinant;
  std::size_t products_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;

  bool granted() const { return checks.passed; }
};

/// T(beta, a_i, a_j) == 0 for all i <= j and a nondegenerate pairing imply
/// beta lies in ker L_[Omega] for every invariant 2-class Omega.
/// PreconditionError when beta is zero.
KernelCertificate universal_kernel_certificate(const InvariantRing& ring, const Vector& beta);
KernelCertificate universal_kernel_certificate(const AlgebraSpec& spec, const ActionSpec& action, const Vector& beta);

/// Basis of {beta : T(beta, ., .) == 0} on invariant H^2.
std::vector<Vector> universal_kernel_search(const InvariantRing& ring);

}  // namespace nilverify
