#include "nilverify/equivariance.hpp"

#include "nilverify/error.hpp"

namespace nilverify {

ActionSpec::ActionSpec(std::size_t order, std::vector<CycloScalar> eigenvalues, const GeneratorSet& gens)
    : order_(order), eigenvalues_(std::move(eigenvalues)) {
  if (order_ == 0) throw PreconditionError("action: order must be positive");
  if (eigenvalues_.size() != gens.size()) throw PreconditionError("action: one eigenvalue per generator required");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = multiplicative_order(eigenvalues_[i]);
    if (!ord)
      throw PreconditionError("action: eigenvalue of " + gens.name(i) + " (" + eigenvalues_[i].to_string() +
                              ") is not a root of unity");
    if (order_ % static_cast<std::size_t>(*ord) != 0)
      throw PreconditionError("action: eigenvalue of " + gens.name(i) + " has order " + std::to_string(*ord) +
                              ", which does not divide " + std::to_string(order_));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!(eigenvalues_[gens.partner(i)] == conj(eigenvalues_[i])))
      throw PreconditionError("action: eigenvalue of " + gens.name(gens.partner(i)) + " is not conjugate to that of " +
                              gens.name(i));
}

ActionSpec ActionSpec::trivial(const GeneratorSet& gens) {
  return ActionSpec(1, std::vector<CycloScalar>(gens.size(), CycloScalar(1)), gens);
}

ActionSpec ActionSpec::heisenberg_z6() {
  const GeneratorSet gens = GeneratorSet::complex_heisenberg();
  std::vector<CycloScalar> ev{CycloScalar::zeta6(4), CycloScalar::zeta6(1), CycloScalar::zeta6(5)};
  for (int i = 0; i < 3; ++i) ev.push_back(conj(ev[i]));
  return ActionSpec(6, std::move(ev), gens);
}

CycloScalar ActionSpec::weight(MultiIndex m) const {
  CycloScalar w(1);
  for (auto p : m.positions()) w *= eigenvalues_.at(p);
  return w;
}

Form act(const ActionSpec& action, long power, const Form& a) {
  Form out;
  for (const auto& [m, c] : a.terms()) out.accumulate(m, c * action.weight(m).pow(power));
  return out;
}

Form average(const ActionSpec& action, const Form& a) {
  Form sum;
  const long n = static_cast<long>(action.order());
  for (long k = 0; k < n; ++k) sum += act(action, k, a);
  return sum * CycloScalar(make_rational(1, n));
}

Certificate verify_equivariance(const AlgebraSpec& spec, const ActionSpec& action) {
  Certificate cert{"equivariance"};
  const auto& gens = spec.generators();
  if (action.size() != gens.size()) {
    cert.record("action size matches generators", false, "eigenvalue count differs from generator count");
    return cert;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Form g = Form::generator(i);
    const Form lhs = act(action, 1, differential(spec, g));
    const Form rhs = differential(spec, act(action, 1, g));
    cert.record("rho^* d " + gens.name(i) + " = d rho^* " + gens.name(i), lhs == rhs,
                lhs == rhs ? "" : "rho^* d = " + lhs.to_string(gens) + ", d rho^* = " + rhs.to_string(gens));
  }
  const long n = static_cast<long>(action.order());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Form g = Form::generator(i);
    const bool ok = act(action, n, g) == g;
    cert.record("(rho^*)^" + std::to_string(n) + " " + gens.name(i) + " = " + gens.name(i), ok);
  }
  return cert;
}

Matrix induced_action_matrix(const CohomologyBasis& h, const ActionSpec& action, long power) {
  std::vector<Vector> cols;
  for (const auto& r : h.representatives()) cols.push_back(h.coordinates(act(action, power, r)));
  return Matrix::from_columns(h.dimension(), cols);
}

namespace {

void require_equivariant(const AlgebraSpec& spec, const ActionSpec& action) {
  const Certificate cert = verify_equivariance(spec, action);
  if (!cert.passed) throw PreconditionError("invariant cohomology: action is not compatible with d (" + *cert.witness + ")");
}

}  // namespace

CohomologyBasis invariant_cohomology_by_averaging(const AlgebraSpec& spec, const ActionSpec& action, std::size_t k) {
  require_equivariant(spec, action);
  const std::size_t n = spec.dimension();
  const CohomologyBasis full = cohomology(spec, k);

  // Invariant cochains of degree k: span of averaged monomials.
  const MonomialBasis mk(n, k);
  std::vector<Form> cochains;
  {
    EchelonSpan span(mk.size());
    for (auto m : mk.elements()) {
      Form avg = average(action, Form::monomial(m));
      if (!avg.is_zero() && span.insert(mk.coordinates(avg))) cochains.push_back(std::move(avg));
    }
  }

  // Closed invariant cochains: kernel of d restricted to the invariant span.
  std::vector<Form> closed;
  if (k < n) {
    const MonomialBasis mk1(n, k + 1);
    std::vector<Vector> cols;
    for (const auto& w : cochains) cols.push_back(mk1.coordinates(differential(spec, w)));
    for (const auto& v : nullspace(Matrix::from_columns(mk1.size(), cols))) {
      Form f;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) f += v[i] * cochains[i];
      closed.push_back(std::move(f));
    }
  } else {
    closed = cochains;
  }

  // Exact invariant cochains: d of invariant (k-1)-cochains.
  EchelonSpan exact(mk.size());
  if (k > 0) {
    const MonomialBasis prev(n, k - 1);
    for (auto m : prev.elements()) {
      const Form avg = average(action, Form::monomial(m));
      if (!avg.is_zero()) exact.insert(mk.coordinates(differential(spec, avg)));
    }
  }
  std::vector<Form> reps;
  for (auto& f : closed)
    if (exact.insert(mk.coordinates(f))) reps.push_back(std::move(f));
  return CohomologyBasis::subspace(full, std::move(reps));
}

CohomologyBasis invariant_cohomology(const AlgebraSpec& spec, const ActionSpec& action, std::size_t k) {
  require_equivariant(spec, action);
  const CohomologyBasis full = cohomology(spec, k);
  Matrix shifted = induced_action_matrix(full, action);
  for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= CycloScalar(1);
  const auto fixed = nullspace(shifted);

  std::vector<Form> reps;
  for (const auto& v : fixed) reps.push_back(average(action, full.representative(v)));
  CohomologyBasis out = CohomologyBasis::subspace(full, std::move(reps));

  // Second route: the invariant subcomplex must give the same subspace.
  const CohomologyBasis other = invariant_cohomology_by_averaging(spec, action, k);
  if (other.dimension() != out.dimension())
    throw InternalError("invariant cohomology: eigenspace has dimension " + std::to_string(out.dimension()) +
                        " but the averaged subcomplex gives " + std::to_string(other.dimension()));
  for (const auto& r : other.representatives()) out.reduce(r);  // throws if outside the eigenspace
  return out;
}

}  // namespace nilverify
