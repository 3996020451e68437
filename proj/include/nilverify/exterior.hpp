#pragma once

// Exterior algebra on a finite set of degree-1 generators with coefficients
// in Q(zeta_12). Generators come in conjugate pairs, one of type (1,0) and
// one of type (0,1).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nilverify/matrix.hpp"
#include "nilverify/scalar.hpp"

namespace nilverify {

enum class GeneratorType { holomorphic, antiholomorphic };

class GeneratorSet {
 public:
  static constexpr std::size_t kMaxGenerators = 32;

  /// `order` fixes the monomial order; in each pair the first name is (1,0).
  GeneratorSet(std::vector<std::string> order,
               const std::vector<std::pair<std::string, std::string>>& pairs);

  /// (mu, nu, theta, ~mu, ~nu, ~theta) with the obvious pairing.
  static GeneratorSet complex_heisenberg();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t partner(std::size_t i) const { return partner_.at(i); }
  GeneratorType type(std::size_t i) const { return type_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }
  /// (1,0) generators in declaration order.
  std::vector<std::size_t> holomorphic() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> partner_;
  std::vector<GeneratorType> type_;
};

/// Strictly increasing set of generator positions, stored as a bit mask.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  constexpr explicit MultiIndex(std::uint32_t bits) : bits_(bits) {}
  /// PreconditionError unless positions are strictly increasing and < 32.
  static MultiIndex from_positions(const std::vector<std::size_t>& positions);

  std::uint32_t bits() const { return bits_; }
  std::size_t degree() const;
  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  std::vector<std::size_t> positions() const;

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.bits_ == b.bits_; }
  /// Graded lexicographic: degree first, then the position sequences.
  friend std::strong_ordering operator<=>(MultiIndex a, MultiIndex b);

 private:
  std::uint32_t bits_ = 0;
};

/// Sign of the permutation sorting the concatenation a|b; 0 if they overlap.
int concatenation_sign(MultiIndex a, MultiIndex b);

class Form {
 public:
  Form() = default;
  Form(const CycloScalar& c);  // NOLINT(google-explicit-constructor)
  Form(long n) : Form(CycloScalar(n)) {}  // NOLINT

  static Form monomial(MultiIndex m, const CycloScalar& c = CycloScalar(1));
  static Form generator(std::size_t i) { return monomial(MultiIndex(1u << i)); }

  const std::map<MultiIndex, CycloScalar>& terms() const { return terms_; }
  CycloScalar coefficient(MultiIndex m) const;
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a nonzero homogeneous form; nullopt for zero or mixed forms.
  std::optional<std::size_t> degree() const;
  bool is_homogeneous() const;
  Form degree_part(std::size_t k) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const CycloScalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const CycloScalar& c) { return a *= c; }
  friend Form operator*(const CycloScalar& c, Form a) { return a *= c; }
  friend bool operator==(const Form&, const Form&) = default;

  /// Adds c to the coefficient of m, dropping the entry if it cancels.
  void accumulate(MultiIndex m, const CycloScalar& c);

  /// Text form re-readable by the expression parser, e.g. "-z^3*mu^~mu + nu^theta".
  std::string to_string(const GeneratorSet& gens) const;

 private:
  std::map<MultiIndex, CycloScalar> terms_;
};

Form wedge(const Form& a, const Form& b);
/// Replaces every generator by its partner and conjugates coefficients.
Form conj_form(const GeneratorSet& gens, const Form& a);
/// Decomposition by the number of (1,0) and (0,1) generators per monomial.
std::map<std::pair<int, int>, Form> bidegree_split(const GeneratorSet& gens, const Form& a);

std::string monomial_to_string(const GeneratorSet& gens, MultiIndex m);

/// The C(n,k) degree-k monomials in graded-lexicographic order, with
/// conversions between forms and coordinate vectors.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t generators, std::size_t degree);

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  MultiIndex operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<MultiIndex>& elements() const { return elements_; }
  std::size_t index_of(MultiIndex m) const;

  /// PreconditionError if the form has components outside this degree.
  Vector coordinates(const Form& f) const;
  Form form(const Vector& v) const;

 private:
  std::size_t degree_;
  std::vector<MultiIndex> elements_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

}  // namespace nilverify
