#include "nilverify/ce_complex.hpp"

#include "nilverify/error.hpp"

namespace nilverify {

namespace detail {

// Ambient data for one degree. The columns of the change of basis P are
// [class representatives | exact basis | monomial complement]; P^{-1} turns a
// closed form into class coordinates plus the coordinates of its exact part.
struct DegreeReduction {
  GeneratorSet gens;
  MonomialBasis monomials;
  std::size_t class_dim = 0;
  std::size_t exact_dim = 0;
  std::vector<MultiIndex> exact_sources;
  std::vector<Form> representatives;
  Matrix p_inverse;
};

}  // namespace detail

AlgebraSpec::AlgebraSpec(GeneratorSet gens, std::vector<Form> differentials)
    : gens_(std::move(gens)), differentials_(std::move(differentials)) {
  if (differentials_.size() != gens_.size())
    throw PreconditionError("algebra: one differential per generator required");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Form& d = differentials_[i];
    if (!d.is_zero() && d.degree() != std::optional<std::size_t>(2))
      throw PreconditionError("algebra: d " + gens_.name(i) + " is not a 2-form");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const std::size_t j = gens_.partner(i);
    if (!(differentials_[j] == conj_form(gens_, differentials_[i])))
      throw PreconditionError("algebra: d " + gens_.name(j) + " = " + differentials_[j].to_string(gens_) +
                              " is not the conjugate of d " + gens_.name(i) + " = " +
                              differentials_[i].to_string(gens_));
  }
}

AlgebraSpec AlgebraSpec::abelian(GeneratorSet gens) {
  std::vector<Form> zero(gens.size());
  return AlgebraSpec(std::move(gens), std::move(zero));
}

AlgebraSpec AlgebraSpec::complex_heisenberg() {
  GeneratorSet gens = GeneratorSet::complex_heisenberg();
  std::vector<Form> d(6);
  d[2] = wedge(Form::generator(0), Form::generator(1));
  d[5] = wedge(Form::generator(3), Form::generator(4));
  return AlgebraSpec(std::move(gens), std::move(d));
}

Form differential(const AlgebraSpec& spec, const Form& a) {
  Form out;
  for (const auto& [m, c] : a.terms()) {
    const auto pos = m.positions();
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const Form& dg = spec.generator_differential(pos[i]);
      if (dg.is_zero()) continue;
      std::uint32_t before = 0, after = 0;
      for (std::size_t j = 0; j < i; ++j) before |= 1u << pos[j];
      for (std::size_t j = i + 1; j < pos.size(); ++j) after |= 1u << pos[j];
      Form term = wedge(wedge(Form::monomial(MultiIndex(before)), dg), Form::monomial(MultiIndex(after)));
      out += (i % 2 == 0 ? c : -c) * term;
    }
  }
  return out;
}

Matrix differential_matrix(const AlgebraSpec& spec, std::size_t k) {
  const std::size_t n = spec.dimension();
  const MonomialBasis src(n, k);
  if (k >= n) return Matrix(0, src.size());
  const MonomialBasis dst(n, k + 1);
  std::vector<Vector> cols;
  cols.reserve(src.size());
  for (auto m : src.elements()) cols.push_back(dst.coordinates(differential(spec, Form::monomial(m))));
  return Matrix::from_columns(dst.size(), cols);
}

Certificate verify_flatness(const AlgebraSpec& spec) {
  Certificate cert{"flatness"};
  const auto& gens = spec.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Form dd = differential(spec, spec.generator_differential(i));
    cert.record("d(d " + gens.name(i) + ") = 0", dd.is_zero(), dd.is_zero() ? "" : "d(d " + gens.name(i) + ") = " + dd.to_string(gens));
  }
  return cert;
}

const GeneratorSet& CohomologyBasis::generators() const { return ambient_->gens; }
std::size_t CohomologyBasis::closed_dimension() const { return ambient_->class_dim + ambient_->exact_dim; }
std::size_t CohomologyBasis::exact_dimension() const { return ambient_->exact_dim; }

CohomologyBasis cohomology(const AlgebraSpec& spec, std::size_t k) {
  const std::size_t n = spec.dimension();
  if (k > n) throw PreconditionError("cohomology: degree exceeds generator count");
  auto red = std::make_shared<detail::DegreeReduction>(detail::DegreeReduction{
      spec.generators(), MonomialBasis(n, k), 0, 0, {}, {}, Matrix()});
  const MonomialBasis& basis = red->monomials;
  const std::size_t dim = basis.size();

  EchelonSpan span(dim);
  std::vector<Vector> columns;
  if (k > 0) {
    const Matrix d_prev = differential_matrix(spec, k - 1);
    const MonomialBasis prev(n, k - 1);
    for (std::size_t j = 0; j < d_prev.cols(); ++j) {
      Vector col = d_prev.column(j);
      if (span.insert(col)) {
        red->exact_sources.push_back(prev[j]);
        columns.push_back(std::move(col));
      }
    }
  }
  red->exact_dim = columns.size();

  std::vector<Vector> kernel;
  if (k < n) {
    kernel = nullspace(differential_matrix(spec, k));
  } else {
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e(dim);
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  }
  std::vector<Vector> reps;
  for (auto& v : kernel)
    if (span.insert(v)) reps.push_back(v);
  red->class_dim = reps.size();
  if (red->class_dim + red->exact_dim != kernel.size())
    throw InternalError("cohomology: closed forms not spanned by representatives and exact forms");

  std::vector<Vector> p_columns = reps;
  p_columns.insert(p_columns.end(), columns.begin(), columns.end());
  for (std::size_t i = 0; i < dim && p_columns.size() < dim; ++i) {
    Vector e(dim);
    e[i] = 1;
    if (span.insert(e)) p_columns.push_back(std::move(e));
  }
  auto p_inv = inverse(Matrix::from_columns(dim, p_columns));
  if (!p_inv) throw InternalError("cohomology: change of basis is singular");
  red->p_inverse = std::move(*p_inv);
  for (const auto& v : reps) red->representatives.push_back(basis.form(v));

  CohomologyBasis out;
  out.degree_ = k;
  out.reps_ = red->representatives;
  const std::size_t h = red->class_dim;
  out.in_ambient_ = Matrix::identity(h);
  out.left_inverse_ = Matrix::identity(h);
  for (std::size_t i = 0; i < h; ++i) out.selected_rows_.push_back(i);
  out.rep_primitives_.assign(h, Form());
  out.ambient_ = std::move(red);
  return out;
}

CohomologyBasis::Reduction CohomologyBasis::reduce(const Form& closed) const {
  const auto& amb = *ambient_;
  const Vector v = amb.monomials.coordinates(closed);
  const Vector c = amb.p_inverse.apply(v);
  const std::size_t h = amb.class_dim;
  const std::size_t b = amb.exact_dim;
  for (std::size_t i = h + b; i < c.size(); ++i)
    if (!c[i].is_zero()) throw PreconditionError("reduce: form " + closed.to_string(amb.gens) + " is not closed");

  Form primitive;
  for (std::size_t j = 0; j < b; ++j) primitive.accumulate(amb.exact_sources[j], c[h + j]);

  Vector selected;
  for (auto r : selected_rows_) selected.push_back(c[r]);
  Reduction out{left_inverse_.apply(selected), std::move(primitive)};
  const Vector back = in_ambient_.apply(out.coordinates);
  for (std::size_t i = 0; i < h; ++i)
    if (!(back[i] == c[i]))
      throw PreconditionError("reduce: class of " + closed.to_string(amb.gens) + " is not in this subspace");
  for (std::size_t j = 0; j < out.coordinates.size(); ++j)
    if (!out.coordinates[j].is_zero()) out.primitive -= out.coordinates[j] * rep_primitives_[j];
  return out;
}

Form CohomologyBasis::representative(const Vector& coords) const {
  if (coords.size() != reps_.size()) throw PreconditionError("representative: wrong coordinate count");
  Form f;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) f += coords[i] * reps_[i];
  return f;
}

CohomologyBasis CohomologyBasis::subspace(const CohomologyBasis& full, std::vector<Form> reps) {
  if (full.in_ambient_.rows() != full.ambient_->class_dim || full.dimension() != full.ambient_->class_dim)
    throw PreconditionError("subspace: expects a full cohomology basis");
  const std::size_t h = full.dimension();
  CohomologyBasis out;
  out.degree_ = full.degree_;
  out.ambient_ = full.ambient_;
  std::vector<Vector> cols;
  for (const auto& s : reps) {
    auto r = full.reduce(s);
    cols.push_back(std::move(r.coordinates));
    out.rep_primitives_.push_back(std::move(r.primitive));
  }
  out.in_ambient_ = Matrix::from_columns(h, cols);
  const std::size_t m = reps.size();
  if (m > 0) {
    const RowEchelon e = rref(out.in_ambient_.transpose());
    if (e.pivot_columns.size() != m) throw PreconditionError("subspace: representatives are dependent modulo exact forms");
    out.selected_rows_ = e.pivot_columns;
    Matrix square(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) square(i, j) = out.in_ambient_(out.selected_rows_[i], j);
    auto li = inverse(square);
    if (!li) throw InternalError("subspace: selected rows are singular");
    out.left_inverse_ = std::move(*li);
  } else {
    out.left_inverse_ = Matrix(0, 0);
  }
  out.reps_ = std::move(reps);
  return out;
}

ExactnessResult exactness_witness(const AlgebraSpec& spec, const Form& a) {
  if (a.is_zero()) return {true, Form(), {}};
  const auto deg = a.degree();
  if (!deg) throw PreconditionError("exactness_witness: form is not homogeneous");
  const Form da = differential(spec, a);
  if (!da.is_zero())
    throw PreconditionError("exactness_witness: form is not closed, d(a) = " + da.to_string(spec.generators()));
  const CohomologyBasis h = cohomology(spec, *deg);
  auto r = h.reduce(a);
  const bool exact = is_zero(r.coordinates);
  return {exact, exact ? std::move(r.primitive) : Form(), std::move(r.coordinates)};
}

Vector cup(const CohomologyBasis& hj, const Vector& x, const CohomologyBasis& hk, const Vector& y,
           const CohomologyBasis& target) {
  if (target.degree() != hj.degree() + hk.degree()) throw PreconditionError("cup: target degree mismatch");
  return target.coordinates(wedge(hj.representative(x), hk.representative(y)));
}

Vector cup(const AlgebraSpec& spec, std::size_t j, const Vector& x, std::size_t k, const Vector& y) {
  if (j + k > spec.dimension()) return {};
  return cup(cohomology(spec, j), x, cohomology(spec, k), y, cohomology(spec, j + k));
}

Matrix cup_pairing(const CohomologyBasis& left, const CohomologyBasis& right, const CohomologyBasis& top) {
  if (top.dimension() != 1) throw PreconditionError("cup_pairing: top cohomology is not one-dimensional");
  Matrix m(left.dimension(), right.dimension());
  for (std::size_t a = 0; a < left.dimension(); ++a)
    for (std::size_t b = 0; b < right.dimension(); ++b)
      m(a, b) = top.coordinates(wedge(left.representatives()[a], right.representatives()[b]))[0];
  return m;
}

}  // namespace nilverify
