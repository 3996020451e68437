#pragma once

// Chevalley-Eilenberg complex of a Lie algebra presented by the differentials
// of its dual generators. For a nilpotent Lie group with a lattice the
// cohomology computed here is the de Rham cohomology of the nilmanifold.

#include <memory>
#include <vector>

#include "nilverify/certificate.hpp"
#include "nilverify/exterior.hpp"
#include "nilverify/matrix.hpp"

namespace nilverify {

class AlgebraSpec {
 public:
  /// differentials[i] is d(generator i). Throws PreconditionError unless each
  /// differential is a 2-form and d(partner(g)) == conj_form(d(g)).
  AlgebraSpec(GeneratorSet gens, std::vector<Form> differentials);

  static AlgebraSpec abelian(GeneratorSet gens);
  /// d mu = d nu = 0, d theta = mu^nu, d ~theta = ~mu^~nu.
  static AlgebraSpec complex_heisenberg();

  const GeneratorSet& generators() const { return gens_; }
  std::size_t dimension() const { return gens_.size(); }
  const Form& generator_differential(std::size_t i) const { return differentials_.at(i); }

 private:
  GeneratorSet gens_;
  std::vector<Form> differentials_;
};

/// Graded derivation extending the generator differentials.
Form differential(const AlgebraSpec& spec, const Form& a);
/// Matrix of d from degree k to degree k+1 in the monomial bases.
Matrix differential_matrix(const AlgebraSpec& spec, std::size_t k);

/// d(d(g)) == 0 for every generator.
Certificate verify_flatness(const AlgebraSpec& spec);

namespace detail {
struct DegreeReduction;
}

/// A basis of H^k with the data needed to reduce closed forms to coordinates.
/// Either the full cohomology or a subspace of it (e.g. invariant classes).
class CohomologyBasis {
 public:
  struct Reduction {
    Vector coordinates;
    /// a - sum coordinates[i] * representative[i] == d(primitive)
    Form primitive;
  };

  std::size_t degree() const { return degree_; }
  std::size_t dimension() const { return reps_.size(); }
  const std::vector<Form>& representatives() const { return reps_; }
  const GeneratorSet& generators() const;
  std::size_t closed_dimension() const;
  std::size_t exact_dimension() const;

  /// PreconditionError if `closed` is not a closed degree-k form, or its class
  /// lies outside this (sub)space.
  Reduction reduce(const Form& closed) const;
  Vector coordinates(const Form& closed) const { return reduce(closed).coordinates; }
  Form representative(const Vector& coords) const;

  /// Subspace spanned by the classes of `reps` (closed, independent mod exact).
  static CohomologyBasis subspace(const CohomologyBasis& full, std::vector<Form> reps);

 private:
  friend CohomologyBasis cohomology(const AlgebraSpec& spec, std::size_t k);
  CohomologyBasis() = default;

  std::size_t degree_ = 0;
  std::shared_ptr<const detail::DegreeReduction> ambient_;
  std::vector<Form> reps_;
  Matrix in_ambient_;
  std::vector<std::size_t> selected_rows_;
  Matrix left_inverse_;
  std::vector<Form> rep_primitives_;
};

/// Exact H^k by elimination; representatives come from the RREF kernel basis
/// of d, kept in monomial order whenever independent modulo exact forms.
CohomologyBasis cohomology(const AlgebraSpec& spec, std::size_t k);

struct ExactnessResult {
  bool exact = false;
  /// d(primitive) == a when exact.
  Form primitive;
  /// Coordinates of [a] in cohomology(spec, deg a); all zero iff exact.
  Vector class_coordinates;
};

/// PreconditionError if `a` is mixed-degree or not closed.
ExactnessResult exactness_witness(const AlgebraSpec& spec, const Form& a);

/// Cup product of classes given by coordinates in the supplied bases.
Vector cup(const CohomologyBasis& hj, const Vector& x, const CohomologyBasis& hk, const Vector& y,
           const CohomologyBasis& target);
Vector cup(const AlgebraSpec& spec, std::size_t j, const Vector& x, std::size_t k, const Vector& y);

/// Pairing matrix H^k x H^(n-k) -> H^n against the single top class.
Matrix cup_pairing(const CohomologyBasis& left, const CohomologyBasis& right, const CohomologyBasis& top);

}  // namespace nilverify
