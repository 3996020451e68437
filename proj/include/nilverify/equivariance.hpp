#pragma once

// Finite cyclic group acting diagonally on the generators by roots of unity,
// and the invariant part of the cohomology.

#include <vector>

#include "nilverify/ce_complex.hpp"

namespace nilverify {

class ActionSpec {
 public:
  /// eigenvalues[i] multiplies generator i under rho^*. Throws
  /// PreconditionError unless every eigenvalue is a 12th root of unity with
  /// eigenvalue^order == 1 and partners carry conjugate eigenvalues.
  ActionSpec(std::size_t order, std::vector<CycloScalar> eigenvalues, const GeneratorSet& gens);

  static ActionSpec trivial(const GeneratorSet& gens);
  /// rho^* mu = zeta6^4 mu, rho^* nu = zeta6 nu, rho^* theta = zeta6^5 theta.
  static ActionSpec heisenberg_z6();

  std::size_t order() const { return order_; }
  std::size_t size() const { return eigenvalues_.size(); }
  const CycloScalar& eigenvalue(std::size_t i) const { return eigenvalues_.at(i); }
  /// Product of the eigenvalues of the generators in m.
  CycloScalar weight(MultiIndex m) const;

 private:
  std::size_t order_;
  std::vector<CycloScalar> eigenvalues_;
};

/// (rho^*)^power applied to a; power may be negative.
Form act(const ActionSpec& action, long power, const Form& a);
/// (1/n) * sum_k act(action, k, a): projection onto invariant cochains.
Form average(const ActionSpec& action, const Form& a);

/// rho^* d == d rho^* on generators and (rho^*)^n == id.
Certificate verify_equivariance(const AlgebraSpec& spec, const ActionSpec& action);

/// Matrix of the induced map on H^k in the given basis (columns = images).
Matrix induced_action_matrix(const CohomologyBasis& h, const ActionSpec& action, long power = 1);

/// Eigenvalue-1 subspace of rho^* on H^k, with invariant representatives.
/// Cross-checked against invariant_cohomology_by_averaging; throws
/// InternalError if the two disagree, PreconditionError if the action is
/// not compatible with d.
CohomologyBasis invariant_cohomology(const AlgebraSpec& spec, const ActionSpec& action, std::size_t k);

/// Cohomology of the averaged (invariant) subcomplex, as classes in H^k.
CohomologyBasis invariant_cohomology_by_averaging(const AlgebraSpec& spec, const ActionSpec& action, std::size_t k);

}  // namespace nilverify
