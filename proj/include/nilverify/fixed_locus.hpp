#pragma once

// Fixed points of a finite cyclic action on the nilmanifold Gamma\G, where G
// is the complex Heisenberg group (or C^3 with twist 0) with product
//   (u1,u2,u3).(v1,v2,v3) = (u1+v1, u2+v2, u3+v3 + twist*u2*v1),
// Gamma the points with coordinates in the Eisenstein lattice Z[zeta6], and
// rho acting diagonally by sixth roots of unity.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilverify/scalar.hpp"

namespace nilverify {

/// a + b*zeta6 in the Eisenstein lattice.
struct LatticePoint {
  long a = 0;
  long b = 0;

  CycloScalar to_scalar() const;
  /// DomainError unless x lies in Z[zeta6].
  static LatticePoint from_scalar(const CycloScalar& x);
  LatticePoint times_zeta() const { return {-b, a + b}; }

  friend LatticePoint operator+(LatticePoint x, LatticePoint y) { return {x.a + y.a, x.b + y.b}; }
  friend LatticePoint operator*(LatticePoint x, LatticePoint y) {
    // zeta6^2 = zeta6 - 1
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend bool operator==(LatticePoint, LatticePoint) = default;
};

/// Coordinates (x, y) of a = x + y*zeta6; DomainError outside Q(zeta6).
std::pair<Rational, Rational> lattice_coordinates(const CycloScalar& a);
bool in_lattice(const CycloScalar& a);
/// Representative of a + Lambda with lattice coordinates in [0,1)^2.
CycloScalar reduce_mod_lattice(const CycloScalar& a);
/// Order used for deterministic listings: by lattice coordinates.
bool lattice_less(const CycloScalar& a, const CycloScalar& b);

struct HeisPoint {
  CycloScalar u1, u2, u3;
  friend bool operator==(const HeisPoint&, const HeisPoint&) = default;
  std::string to_string() const;
};

struct NilmanifoldModel {
  /// 1 for the Heisenberg product, 0 for the abelian group C^3.
  int twist = 1;
  std::size_t order = 6;
  /// rho(u1,u2,u3) = (m1 u1, m2 u2, m3 u3); each a sixth root of unity.
  std::array<CycloScalar, 3> multipliers{CycloScalar::zeta6(4), CycloScalar::zeta6(1), CycloScalar::zeta6(5)};

  static NilmanifoldModel heisenberg_z6() { return {}; }
  /// Validates twist, order and multipliers; throws PreconditionError.
  void validate() const;
  CycloScalar multiplier(std::size_t coord, long power) const { return multipliers.at(coord).pow(power); }
};

HeisPoint group_mul(const NilmanifoldModel& model, const HeisPoint& g, const HeisPoint& h);
HeisPoint group_mul(const HeisPoint& g, const HeisPoint& h);
HeisPoint group_inverse(const NilmanifoldModel& model, const HeisPoint& g);
HeisPoint group_inverse(const HeisPoint& g);
HeisPoint rho_power(const NilmanifoldModel& model, long k, const HeisPoint& g);
/// Canonical representative of Gamma*g: u1, then u2 (carrying the twist into
/// u3), then u3 are moved into the fundamental parallelogram.
HeisPoint normalize(const NilmanifoldModel& model, const HeisPoint& g);
HeisPoint normalize(const HeisPoint& g);

struct TorusFixedSet {
  bool whole = false;
  std::vector<CycloScalar> points;
};

/// {u in C/Lambda : m*u = u}; m must be a sixth root of unity.
TorusFixedSet torus_fixed_points(const CycloScalar& m);
/// Representatives of alpha^{-1}Lambda / Lambda for nonzero alpha in Lambda;
/// there are norm(alpha) of them.
std::vector<CycloScalar> lattice_preimage(const CycloScalar& alpha);

/// Subgroup {k : rho^k ...} of Z_n, stored as its sorted elements.
struct Subgroup {
  std::size_t order_of_group = 1;
  std::vector<long> elements{0};

  std::size_t size() const { return elements.size(); }
  bool contains(long k) const;
  /// "trivial", "full", "H" (order 2) or "K" (order 3) for Z_6; "{0,2,4}" style otherwise.
  std::string name() const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// A family of points of M: u1 and u2 fixed or free, u3 free or equal to
/// offset + slope*u1. Isolated points have no free coordinate.
struct Stratum {
  std::optional<CycloScalar> u1;
  std::optional<CycloScalar> u2;
  bool u3_free = false;
  CycloScalar u3_offset;
  CycloScalar u3_slope;
  /// Isotropy of a generic member.
  Subgroup isotropy;

  /// Complex dimension (number of free coordinates).
  std::size_t dimension() const;
  bool is_point() const { return dimension() == 0; }
  /// By real dimension: "point", "surface", "fourfold", "sixfold".
  std::string kind() const;
  /// Member at the given values of the free coordinates (ignored when fixed).
  HeisPoint at(const CycloScalar& t1 = {}, const CycloScalar& t2 = {}, const CycloScalar& t3 = {}) const;
  HeisPoint point() const { return at(); }
  /// Same family after canonicalising fixed data (labels compare equal).
  bool same_label(const Stratum& o) const;
  std::string to_string() const;
};

Stratum make_point_stratum(const HeisPoint& p);

/// Fixed set of rho^k for k in 1..order-1, one entry per labelled family.
std::vector<Stratum> fixed_strata(const NilmanifoldModel& model, long k);

Subgroup isotropy(const NilmanifoldModel& model, const HeisPoint& g);
/// Elements fixing the whole family pointwise.
Subgroup family_isotropy(const NilmanifoldModel& model, const Stratum& s);
/// True iff rho^k fixes every member (symbolic check plus sampled members).
bool verify_stratum(const NilmanifoldModel& model, long k, const Stratum& s);
/// True iff the normalised point belongs to the family with free coordinates
/// ranging over the fundamental domain.
bool stratum_contains(const NilmanifoldModel& model, const Stratum& s, const HeisPoint& p);
/// Image of a family under rho^j, canonicalised.
Stratum rho_image(const NilmanifoldModel& model, long j, const Stratum& s);
Stratum canonicalize(const NilmanifoldModel& model, Stratum s);

struct Orbit {
  std::vector<std::size_t> members;
  std::size_t representative = 0;
};

/// Partition of `strata` into rho-orbits. InternalError if rho does not map
/// the list to itself.
std::vector<Orbit> orbit_decomposition(const NilmanifoldModel& model, const std::vector<Stratum>& strata);

/// Groups of labelled families that are sheets of one connected subset of M:
/// moving a free coordinate by a lattice vector can land on another label.
std::vector<std::vector<std::size_t>> connected_components(const NilmanifoldModel& model,
                                                           const std::vector<Stratum>& families);

struct CurveRamification {
  std::string name;
  std::size_t coordinate = 0;
  /// Degree of the quotient map from the curve to its image.
  std::size_t degree = 1;
  /// Points with nontrivial stabiliser on the curve, and the stabiliser orders.
  std::vector<std::pair<CycloScalar, std::size_t>> branch_points;
};

struct SingularLocusReport {
  std::size_t order = 1;
  struct PowerSummary {
    long k;
    std::size_t points;
    /// Families of complex dimension 1.
    std::size_t surfaces;
    std::size_t higher;
  };
  std::vector<PowerSummary> powers;

  /// Isolated orbifold points: not on any positive-dimensional fixed family.
  std::vector<Stratum> isolated_points;
  std::vector<Orbit> isolated_orbits;

  /// Positive-dimensional labelled families and their orbits.
  std::vector<Stratum> families;
  std::vector<Orbit> family_orbits;
  /// Orbits whose stabiliser equals the generic isotropy (quotient is the family itself).
  std::size_t free_family_orbits = 0;
  struct SpecialFamily {
    std::size_t family = 0;
    std::size_t stabilizer_order = 0;
    /// Fixed points on the family whose isotropy exceeds the generic one.
    std::vector<Stratum> special_points;
  };
  std::vector<SpecialFamily> special_families;

  /// Connected components of the union of families and their rho-orbits.
  std::vector<std::vector<std::size_t>> components;
  std::size_t component_orbits = 0;

  std::vector<CurveRamification> ramification;
};

SingularLocusReport singular_locus_report(const NilmanifoldModel& model);

/// Quotient data for the invariant curve {u_i free, other coordinates 0}.
CurveRamification curve_ramification(const NilmanifoldModel& model, std::size_t coordinate);

}  // namespace nilverify
