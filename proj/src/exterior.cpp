#include "nilverify/exterior.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "nilverify/error.hpp"

namespace nilverify {

GeneratorSet::GeneratorSet(std::vector<std::string> order,
                           const std::vector<std::pair<std::string, std::string>>& pairs)
    : names_(std::move(order)) {
  const std::size_t n = names_.size();
  if (n > kMaxGenerators) throw PreconditionError("too many generators (max 32)");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw PreconditionError("empty generator name");
    if (!seen.insert(name).second) throw PreconditionError("duplicate generator '" + name + "'");
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  partner_.assign(n, unset);
  type_.assign(n, GeneratorType::holomorphic);
  for (const auto& [a, b] : pairs) {
    const auto ia = index_of(a);
    const auto ib = index_of(b);
    if (!ia) throw PreconditionError("pair: unknown generator '" + a + "'");
    if (!ib) throw PreconditionError("pair: unknown generator '" + b + "'");
    if (*ia == *ib) throw PreconditionError("pair: generator '" + a + "' paired with itself");
    if (partner_[*ia] != unset || partner_[*ib] != unset)
      throw PreconditionError("pair: generator paired twice in '" + a + " " + b + "'");
    partner_[*ia] = *ib;
    partner_[*ib] = *ia;
    type_[*ia] = GeneratorType::holomorphic;
    type_[*ib] = GeneratorType::antiholomorphic;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (partner_[i] == unset) throw PreconditionError("generator '" + names_[i] + "' has no conjugate pair");
}

GeneratorSet GeneratorSet::complex_heisenberg() {
  return GeneratorSet({"mu", "nu", "theta", "~mu", "~nu", "~theta"},
                      {{"mu", "~mu"}, {"nu", "~nu"}, {"theta", "~theta"}});
}

std::optional<std::size_t> GeneratorSet::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> GeneratorSet::holomorphic() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (type_[i] == GeneratorType::holomorphic) out.push_back(i);
  return out;
}

MultiIndex MultiIndex::from_positions(const std::vector<std::size_t>& positions) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= GeneratorSet::kMaxGenerators) throw PreconditionError("multi-index position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw PreconditionError("multi-index positions must be strictly increasing");
    bits |= 1u << positions[i];
  }
  return MultiIndex(bits);
}

std::size_t MultiIndex::degree() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> MultiIndex::positions() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::strong_ordering operator<=>(MultiIndex a, MultiIndex b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::uint32_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // At the lowest differing position, the index holding it is lexicographically smaller.
  const std::uint32_t low = diff & (~diff + 1);
  return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

int concatenation_sign(MultiIndex a, MultiIndex b) {
  if (a.bits() & b.bits()) return 0;
  int inversions = 0;
  for (std::uint32_t rest = b.bits(); rest != 0; rest &= rest - 1) {
    const int pos = std::countr_zero(rest);
    const std::uint32_t above = pos == 31 ? 0u : (a.bits() >> (pos + 1));
    inversions += std::popcount(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Form::Form(const CycloScalar& c) {
  if (!c.is_zero()) terms_.emplace(MultiIndex(0), c);
}

Form Form::monomial(MultiIndex m, const CycloScalar& c) {
  Form f;
  if (!c.is_zero()) f.terms_.emplace(m, c);
  return f;
}

CycloScalar Form::coefficient(MultiIndex m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? CycloScalar() : it->second;
}

std::optional<std::size_t> Form::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool Form::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Form Form::degree_part(std::size_t k) const {
  Form out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) out.terms_.emplace(m, c);
  return out;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void Form::accumulate(MultiIndex m, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, -c);
  return *this;
}

Form& Form::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

std::string monomial_to_string(const GeneratorSet& gens, MultiIndex m) {
  std::string out;
  for (auto p : m.positions()) {
    if (!out.empty()) out += "^";
    out += gens.name(p);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Coefficient prefix for a term; single-component scalars print bare.
std::string coefficient_prefix(const CycloScalar& c) {
  if (c.is_one()) return "";
  if (c == CycloScalar(-1)) return "-";
  int nonzero = 0;
  for (const auto& x : c.coefficients())
    if (x != 0) ++nonzero;
  if (nonzero == 1) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

}  // namespace

std::string Form::to_string(const GeneratorSet& gens) const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    const std::string term =
        m.degree() == 0 ? c.to_string() : coefficient_prefix(c) + monomial_to_string(gens, m);
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = concatenation_sign(ma, mb);
      if (s == 0) continue;
      const CycloScalar prod = ca * cb;
      out.accumulate(MultiIndex(ma.bits() | mb.bits()), s > 0 ? prod : -prod);
    }
  return out;
}

Form conj_form(const GeneratorSet& gens, const Form& a) {
  Form out;
  for (const auto& [m, c] : a.terms()) {
    Form image(conj(c));
    for (auto p : m.positions()) image = wedge(image, Form::generator(gens.partner(p)));
    out += image;
  }
  return out;
}

std::map<std::pair<int, int>, Form> bidegree_split(const GeneratorSet& gens, const Form& a) {
  std::map<std::pair<int, int>, Form> out;
  for (const auto& [m, c] : a.terms()) {
    int p = 0, q = 0;
    for (auto i : m.positions()) (gens.type(i) == GeneratorType::holomorphic ? p : q)++;
    out[{p, q}].accumulate(m, c);
  }
  return out;
}

MonomialBasis::MonomialBasis(std::size_t generators, std::size_t degree) : degree_(degree) {
  if (generators > GeneratorSet::kMaxGenerators) throw PreconditionError("too many generators");
  if (degree > generators) throw PreconditionError("monomial degree exceeds generator count");
  // Enumerate k-subsets in lexicographic order.
  std::vector<std::size_t> pos(degree);
  for (std::size_t i = 0; i < degree; ++i) pos[i] = i;
  while (true) {
    elements_.push_back(MultiIndex::from_positions(pos));
    std::size_t i = degree;
    while (i > 0 && pos[i - 1] == generators - degree + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < degree; ++j) pos[j] = pos[j - 1] + 1;
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].bits(), i);
}

std::size_t MonomialBasis::index_of(MultiIndex m) const {
  const auto it = index_.find(m.bits());
  if (it == index_.end()) throw PreconditionError("monomial not in basis of this degree");
  return it->second;
}

Vector MonomialBasis::coordinates(const Form& f) const {
  Vector v(size());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree_)
      throw PreconditionError("form has a component of degree " + std::to_string(m.degree()) +
                              ", expected " + std::to_string(degree_));
    v[index_of(m)] = c;
  }
  return v;
}

Form MonomialBasis::form(const Vector& v) const {
  if (v.size() != size()) throw PreconditionError("coordinate vector has wrong length");
  Form f;
  for (std::size_t i = 0; i < v.size(); ++i) f.accumulate(elements_[i], v[i]);
  return f;
}

}  // namespace nilverify
