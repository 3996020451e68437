#include "nilverify/fixed_locus.hpp"

#include <algorithm>
#include <numeric>

#include "nilverify/error.hpp"

namespace nilverify {

CycloScalar LatticePoint::to_scalar() const { return CycloScalar(a) + CycloScalar(b) * CycloScalar::zeta6(1); }

LatticePoint LatticePoint::from_scalar(const CycloScalar& x) {
  const auto [re, im] = lattice_coordinates(x);
  if (re.get_den() != 1 || im.get_den() != 1) throw DomainError("not a lattice point: " + x.to_string());
  if (!re.get_num().fits_slong_p() || !im.get_num().fits_slong_p()) throw DomainError("lattice point out of range");
  return {re.get_num().get_si(), im.get_num().get_si()};
}

std::pair<Rational, Rational> lattice_coordinates(const CycloScalar& a) {
  // zeta6 = z^2, so Q(zeta6) is the span of {1, z^2}.
  if (a.coefficient(1) != 0 || a.coefficient(3) != 0)
    throw DomainError("coordinate outside Q(zeta6): " + a.to_string());
  return {a.coefficient(0), a.coefficient(2)};
}

bool in_lattice(const CycloScalar& a) {
  if (a.coefficient(1) != 0 || a.coefficient(3) != 0) return false;
  return a.coefficient(0).get_den() == 1 && a.coefficient(2).get_den() == 1;
}

CycloScalar reduce_mod_lattice(const CycloScalar& a) {
  const auto [x, y] = lattice_coordinates(a);
  return CycloScalar(std::array<Rational, 4>{x - floor_rational(x), 0, y - floor_rational(y), 0});
}

bool lattice_less(const CycloScalar& a, const CycloScalar& b) { return lexicographic_less(a, b); }

std::string HeisPoint::to_string() const {
  return "(" + u1.to_string() + ", " + u2.to_string() + ", " + u3.to_string() + ")";
}

void NilmanifoldModel::validate() const {
  if (twist != 0 && twist != 1) throw PreconditionError("model: twist must be 0 or 1");
  if (order == 0) throw PreconditionError("model: order must be positive");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto e = root_of_unity_exponent(multipliers[i]);
    if (!e || *e % 2 != 0)
      throw PreconditionError("model: multiplier " + std::to_string(i + 1) + " is not a sixth root of unity");
    const auto ord = multiplicative_order(multipliers[i]);
    if (order % static_cast<std::size_t>(*ord) != 0)
      throw PreconditionError("model: multiplier " + std::to_string(i + 1) + " has order not dividing " +
                              std::to_string(order));
  }
  if (twist == 1 && !(multipliers[2] == multipliers[0] * multipliers[1]))
    throw PreconditionError("model: rho is not an automorphism (m3 != m1*m2)");
}

HeisPoint group_mul(const NilmanifoldModel& model, const HeisPoint& g, const HeisPoint& h) {
  HeisPoint out{g.u1 + h.u1, g.u2 + h.u2, g.u3 + h.u3};
  if (model.twist != 0) out.u3 += g.u2 * h.u1;
  return out;
}

HeisPoint group_mul(const HeisPoint& g, const HeisPoint& h) { return group_mul(NilmanifoldModel{}, g, h); }

HeisPoint group_inverse(const NilmanifoldModel& model, const HeisPoint& g) {
  HeisPoint out{-g.u1, -g.u2, -g.u3};
  if (model.twist != 0) out.u3 += g.u2 * g.u1;
  return out;
}

HeisPoint group_inverse(const HeisPoint& g) { return group_inverse(NilmanifoldModel{}, g); }

HeisPoint rho_power(const NilmanifoldModel& model, long k, const HeisPoint& g) {
  return {model.multiplier(0, k) * g.u1, model.multiplier(1, k) * g.u2, model.multiplier(2, k) * g.u3};
}

HeisPoint normalize(const NilmanifoldModel& model, const HeisPoint& g) {
  // (l1,0,0).g, then (0,l2,0).g, then (0,0,l3).g.
  HeisPoint out = g;
  out.u1 = reduce_mod_lattice(g.u1);
  const CycloScalar u2 = reduce_mod_lattice(g.u2);
  const CycloScalar l2 = u2 - g.u2;
  out.u2 = u2;
  if (model.twist != 0) out.u3 += l2 * out.u1;
  out.u3 = reduce_mod_lattice(out.u3);
  return out;
}

HeisPoint normalize(const HeisPoint& g) { return normalize(NilmanifoldModel{}, g); }

std::vector<CycloScalar> lattice_preimage(const CycloScalar& alpha) {
  if (alpha.is_zero() || !in_lattice(alpha)) throw PreconditionError("lattice_preimage: alpha must be a nonzero lattice point");
  const Rational n = (alpha * conj(alpha)).coefficient(0);
  if (!n.get_num().fits_slong_p()) throw DomainError("lattice_preimage: index too large");
  const long count = n.get_num().get_si();
  const CycloScalar g1 = inv(alpha);
  const CycloScalar g2 = CycloScalar::zeta6(1) * g1;
  std::vector<CycloScalar> out;
  for (long i = 0; i < count; ++i)
    for (long j = 0; j < count; ++j) out.push_back(reduce_mod_lattice(CycloScalar(i) * g1 + CycloScalar(j) * g2));
  std::sort(out.begin(), out.end(), lattice_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (static_cast<long>(out.size()) != count)
    throw InternalError("lattice_preimage: found " + std::to_string(out.size()) + " cosets, expected " +
                        std::to_string(count));
  return out;
}

TorusFixedSet torus_fixed_points(const CycloScalar& m) {
  const auto e = root_of_unity_exponent(m);
  if (!e || *e % 2 != 0) throw PreconditionError("torus_fixed_points: multiplier must be a power of zeta6");
  TorusFixedSet out;
  if (m.is_one()) {
    out.whole = true;
    return out;
  }
  out.points = lattice_preimage(m - CycloScalar(1));
  return out;
}

bool Subgroup::contains(long k) const {
  const long n = static_cast<long>(order_of_group);
  const long r = ((k % n) + n) % n;
  return std::binary_search(elements.begin(), elements.end(), r);
}

std::string Subgroup::name() const {
  if (size() == 1) return "trivial";
  if (size() == order_of_group) return "full";
  if (order_of_group == 6 && size() == 2) return "H";
  if (order_of_group == 6 && size() == 3) return "K";
  std::string s = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) s += (i ? "," : "") + std::to_string(elements[i]);
  return s + "}";
}

std::size_t Stratum::dimension() const { return (u1 ? 0 : 1) + (u2 ? 0 : 1) + (u3_free ? 1 : 0); }

std::string Stratum::kind() const {
  switch (dimension()) {
    case 0: return "point";
    case 1: return "surface";
    case 2: return "fourfold";
    default: return "sixfold";
  }
}

HeisPoint Stratum::at(const CycloScalar& t1, const CycloScalar& t2, const CycloScalar& t3) const {
  HeisPoint p;
  p.u1 = u1 ? *u1 : t1;
  p.u2 = u2 ? *u2 : t2;
  p.u3 = u3_free ? t3 : u3_offset + u3_slope * p.u1;
  return p;
}

bool Stratum::same_label(const Stratum& o) const {
  if (u1 != o.u1 || u2 != o.u2 || u3_free != o.u3_free) return false;
  return u3_free || (u3_offset == o.u3_offset && u3_slope == o.u3_slope);
}

std::string Stratum::to_string() const {
  const std::string a = u1 ? u1->to_string() : "u1";
  const std::string b = u2 ? u2->to_string() : "u2";
  std::string c;
  if (u3_free) {
    c = "u3";
  } else if (u1 || u3_slope.is_zero()) {
    c = u3_offset.to_string();
  } else {
    c = "(" + u3_slope.to_string() + ")*u1 + " + u3_offset.to_string();
  }
  return "(" + a + ", " + b + ", " + c + ")";
}

Stratum make_point_stratum(const HeisPoint& p) {
  Stratum s;
  s.u1 = p.u1;
  s.u2 = p.u2;
  s.u3_offset = p.u3;
  return s;
}

Stratum canonicalize(const NilmanifoldModel& model, Stratum s) {
  if (s.u1) {
    if (!s.u3_free && !s.u3_slope.is_zero()) {
      s.u3_offset += s.u3_slope * *s.u1;
      s.u3_slope = CycloScalar();
    }
    s.u1 = reduce_mod_lattice(*s.u1);
  }
  if (s.u2) {
    const CycloScalar reduced = reduce_mod_lattice(*s.u2);
    const CycloScalar l2 = reduced - *s.u2;
    s.u2 = reduced;
    if (!s.u3_free && model.twist != 0) {
      if (s.u1)
        s.u3_offset += l2 * *s.u1;
      else
        s.u3_slope += l2;
    }
  }
  if (s.u3_free) {
    s.u3_offset = CycloScalar();
    s.u3_slope = CycloScalar();
  } else {
    s.u3_offset = reduce_mod_lattice(s.u3_offset);
  }
  return s;
}

Subgroup isotropy(const NilmanifoldModel& model, const HeisPoint& g) {
  const HeisPoint base = normalize(model, g);
  Subgroup out{model.order, {}};
  for (long j = 0; j < static_cast<long>(model.order); ++j)
    if (normalize(model, rho_power(model, j, base)) == base) out.elements.push_back(j);
  return out;
}

namespace {

bool in_gamma(const HeisPoint& g) { return in_lattice(g.u1) && in_lattice(g.u2) && in_lattice(g.u3); }

// rho^j fixes every member: rho^j(P(t)) = gamma.P(t) with one gamma in Gamma.
// Both sides are affine in t, so the base point and unit steps suffice.
bool family_fixed_by(const NilmanifoldModel& model, long j, const Stratum& s) {
  const HeisPoint p0 = s.at();
  const HeisPoint gamma = group_mul(model, rho_power(model, j, p0), group_inverse(model, p0));
  if (!in_gamma(gamma)) return false;
  std::vector<HeisPoint> probes{p0};
  if (!s.u1) probes.push_back(s.at(1, 0, 0));
  if (!s.u2) probes.push_back(s.at(0, 1, 0));
  if (s.u3_free) probes.push_back(s.at(0, 0, 1));
  return std::all_of(probes.begin(), probes.end(), [&](const HeisPoint& p) {
    return rho_power(model, j, p) == group_mul(model, gamma, p);
  });
}

void require_power(const NilmanifoldModel& model, long k) {
  if (k < 1 || k >= static_cast<long>(model.order))
    throw PreconditionError("fixed_strata: power must lie in 1.." + std::to_string(model.order - 1));
}

}  // namespace

Subgroup family_isotropy(const NilmanifoldModel& model, const Stratum& s) {
  Subgroup out{model.order, {}};
  for (long j = 0; j < static_cast<long>(model.order); ++j)
    if (family_fixed_by(model, j, s)) out.elements.push_back(j);
  return out;
}

bool verify_stratum(const NilmanifoldModel& model, long k, const Stratum& s) {
  if (!family_fixed_by(model, k, s)) return false;
  for (long j : s.isotropy.elements)
    if (!family_fixed_by(model, j, s)) return false;
  if (!(family_isotropy(model, s) == s.isotropy)) return false;
  // Independent pass on sample members through the coset normal form.
  const CycloScalar a = make_rational(1, 7) + CycloScalar(make_rational(2, 11)) * CycloScalar::zeta6(1);
  const CycloScalar b = make_rational(-3, 5) + CycloScalar(make_rational(1, 13)) * CycloScalar::zeta6(1);
  for (const auto& p : {s.at(), s.at(a, b, a * b), s.at(b, a, a + b)}) {
    const HeisPoint n = normalize(model, p);
    if (!(normalize(model, rho_power(model, k, p)) == n)) return false;
    if (!stratum_contains(model, s, n)) return false;
  }
  return true;
}

namespace {

// Lattice shifts of a free parameter change the fixed data only modulo a
// finite group; this is its exponent for the given coefficient.
long shift_period(const CycloScalar& coefficient) {
  const auto [x, y] = lattice_coordinates(coefficient);
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
  return d.get_si();
}

std::vector<CycloScalar> shifts(long period) {
  std::vector<CycloScalar> out;
  for (long i = 0; i < period; ++i)
    for (long j = 0; j < period; ++j) out.push_back(CycloScalar(i) + CycloScalar(j) * CycloScalar::zeta6(1));
  return out;
}

}  // namespace

bool stratum_contains(const NilmanifoldModel& model, const Stratum& s, const HeisPoint& p) {
  const HeisPoint target = normalize(model, p);
  const auto l1 = shifts(!s.u1 && !s.u3_free ? shift_period(s.u3_slope) : 1);
  const auto l2 = shifts(!s.u2 && !s.u3_free && s.u1 && model.twist != 0 ? shift_period(*s.u1) : 1);
  for (const auto& a : l1)
    for (const auto& b : l2)
      if (normalize(model, s.at(target.u1 + a, target.u2 + b, target.u3)) == target) return true;
  return false;
}

std::vector<Stratum> fixed_strata(const NilmanifoldModel& model, long k) {
  model.validate();
  require_power(model, k);
  const CycloScalar m1 = model.multiplier(0, k), m2 = model.multiplier(1, k), m3 = model.multiplier(2, k);
  const CycloScalar c(model.twist);

  // Torus-level solutions; nullopt marks a free coordinate.
  auto choices = [](const CycloScalar& m) {
    std::vector<std::optional<CycloScalar>> out;
    const TorusFixedSet t = torus_fixed_points(m);
    if (t.whole)
      out.emplace_back();
    else
      for (const auto& u : t.points) out.emplace_back(u);
    return out;
  };

  std::vector<Stratum> out;
  for (const auto& u1 : choices(m1))
    for (const auto& u2 : choices(m2)) {
      // (m2-1) u2 = l2 in Lambda; l2 feeds the centre through the twist.
      const CycloScalar l2 = u2 ? (m2 - CycloScalar(1)) * *u2 : CycloScalar();
      std::vector<Stratum> candidates;
      if (!m3.is_one()) {
        // (m3-1) u3 = l3 + c l2 u1: u3 = t3 + (c l2 / (m3-1)) u1 with t3 in T3.
        const CycloScalar slope = c * l2 / (m3 - CycloScalar(1));
        for (const auto& t3 : torus_fixed_points(m3).points) {
          Stratum s;
          s.u1 = u1;
          s.u2 = u2;
          s.u3_offset = t3;
          s.u3_slope = slope;
          candidates.push_back(s);
        }
      } else {
        // l3 + c l2 u1 = 0 must be solvable; u3 is then free.
        const CycloScalar obstruction = c * l2;
        const bool solvable = obstruction.is_zero() || (u1 && in_lattice(obstruction * *u1));
        if (!solvable) continue;
        Stratum s;
        s.u1 = u1;
        s.u2 = u2;
        s.u3_free = true;
        candidates.push_back(s);
      }
      for (auto& s : candidates) {
        s = canonicalize(model, s);
        if (std::none_of(out.begin(), out.end(), [&](const Stratum& o) { return o.same_label(s); }))
          out.push_back(std::move(s));
      }
    }

  for (auto& s : out) {
    s.isotropy = s.is_point() ? isotropy(model, s.point()) : family_isotropy(model, s);
    if (!verify_stratum(model, k, s))
      throw InternalError("fixed_strata: stratum " + s.to_string() + " failed re-verification");
  }
  return out;
}

Stratum rho_image(const NilmanifoldModel& model, long j, const Stratum& s) {
  const CycloScalar m1 = model.multiplier(0, j), m2 = model.multiplier(1, j), m3 = model.multiplier(2, j);
  Stratum out = s;
  if (s.u1) out.u1 = m1 * *s.u1;
  if (s.u2) out.u2 = m2 * *s.u2;
  if (!s.u3_free) {
    out.u3_offset = m3 * s.u3_offset;
    // New parameter t' = m1 t.
    out.u3_slope = s.u1 ? CycloScalar() : m3 * s.u3_slope / m1;
    if (s.u1) out.u3_offset += m3 * s.u3_slope * *s.u1;
  }
  return canonicalize(model, out);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> groups() {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(parent.size(), parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
      const std::size_t r = find(i);
      if (slot[r] == parent.size()) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(i);
    }
    return out;
  }
};

std::size_t index_of(const std::vector<Stratum>& list, const Stratum& s, const char* what) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].same_label(s)) return i;
  throw InternalError(std::string(what) + ": " + s.to_string() + " is not in the list");
}

}  // namespace

std::vector<Orbit> orbit_decomposition(const NilmanifoldModel& model, const std::vector<Stratum>& strata) {
  UnionFind uf(strata.size());
  for (std::size_t i = 0; i < strata.size(); ++i)
    uf.unite(i, index_of(strata, rho_image(model, 1, strata[i]), "orbit_decomposition"));
  std::vector<Orbit> out;
  for (auto& g : uf.groups()) out.push_back({g, g.front()});
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const NilmanifoldModel& model,
                                                           const std::vector<Stratum>& families) {
  UnionFind uf(families.size());
  const std::array<CycloScalar, 2> steps{CycloScalar(1), CycloScalar::zeta6(1)};
  for (std::size_t i = 0; i < families.size(); ++i) {
    const Stratum& s = families[i];
    for (const auto& l : steps) {
      if (!s.u1 && !s.u3_free) {
        // P(t1 + l) = (l,0,0).P'(t1) with u3' = offset + slope*l + slope*t1.
        Stratum shifted = s;
        shifted.u3_offset += s.u3_slope * l;
        uf.unite(i, index_of(families, canonicalize(model, shifted), "connected_components"));
      }
      if (!s.u2 && !s.u3_free && model.twist != 0) {
        // (0,-l,0).(u1, t2 + l, u3) = (u1, t2, u3 - l*u1).
        Stratum shifted = s;
        if (s.u1)
          shifted.u3_offset -= l * *s.u1;
        else
          shifted.u3_slope -= l;
        uf.unite(i, index_of(families, canonicalize(model, shifted), "connected_components"));
      }
    }
  }
  return uf.groups();
}

CurveRamification curve_ramification(const NilmanifoldModel& model, std::size_t coordinate) {
  model.validate();
  if (coordinate > 2) throw PreconditionError("curve_ramification: coordinate must be 0, 1 or 2");
  CurveRamification out;
  out.name = "Sigma" + std::to_string(coordinate + 1);
  out.coordinate = coordinate;
  const auto d = static_cast<std::size_t>(*multiplicative_order(model.multipliers[coordinate]));
  out.degree = d;
  const std::size_t kernel = model.order / d;

  std::vector<CycloScalar> candidates;
  for (std::size_t j = 1; j < d; ++j)
    for (const auto& u : torus_fixed_points(model.multiplier(coordinate, static_cast<long>(j))).points)
      candidates.push_back(u);
  std::sort(candidates.begin(), candidates.end(), lattice_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& u : candidates) {
    HeisPoint p;
    (coordinate == 0 ? p.u1 : coordinate == 1 ? p.u2 : p.u3) = u;
    const std::size_t order = isotropy(model, p).size() / kernel;
    if (order > 1) out.branch_points.emplace_back(u, order);
  }
  std::stable_sort(out.branch_points.begin(), out.branch_points.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

SingularLocusReport singular_locus_report(const NilmanifoldModel& model) {
  model.validate();
  SingularLocusReport r;
  r.order = model.order;
  std::vector<Stratum> points;
  auto add_unique = [](std::vector<Stratum>& list, const Stratum& s) {
    if (std::none_of(list.begin(), list.end(), [&](const Stratum& o) { return o.same_label(s); })) list.push_back(s);
  };
  for (long k = 1; k < static_cast<long>(model.order); ++k) {
    const auto strata = fixed_strata(model, k);
    SingularLocusReport::PowerSummary summary{k, 0, 0, 0};
    for (const auto& s : strata) {
      if (s.is_point()) {
        ++summary.points;
        add_unique(points, s);
      } else {
        (s.dimension() == 1 ? summary.surfaces : summary.higher) += 1;
        add_unique(r.families, s);
      }
    }
    r.powers.push_back(summary);
  }

  auto on_family = [&](const Stratum& p) {
    return std::any_of(r.families.begin(), r.families.end(),
                       [&](const Stratum& f) { return stratum_contains(model, f, p.point()); });
  };
  for (const auto& p : points)
    if (!on_family(p)) r.isolated_points.push_back(p);
  r.isolated_orbits = orbit_decomposition(model, r.isolated_points);

  r.family_orbits = orbit_decomposition(model, r.families);
  for (const auto& orbit : r.family_orbits) {
    const std::size_t f = orbit.representative;
    const std::size_t stabilizer = model.order / orbit.members.size();
    SingularLocusReport::SpecialFamily special{f, stabilizer, {}};
    for (const auto& p : points)
      if (stratum_contains(model, r.families[f], p.point()) && p.isotropy.size() > r.families[f].isotropy.size())
        special.special_points.push_back(p);
    if (stabilizer == r.families[f].isotropy.size() && special.special_points.empty())
      ++r.free_family_orbits;
    else
      r.special_families.push_back(std::move(special));
  }

  r.components = connected_components(model, r.families);
  std::vector<std::size_t> component_of(r.families.size());
  for (std::size_t c = 0; c < r.components.size(); ++c)
    for (auto f : r.components[c]) component_of[f] = c;
  UnionFind uf(r.components.size());
  for (std::size_t f = 0; f < r.families.size(); ++f)
    uf.unite(component_of[f], component_of[index_of(r.families, rho_image(model, 1, r.families[f]), "singular_locus")]);
  r.component_orbits = uf.groups().size();

  for (std::size_t i = 0; i < 3; ++i) r.ramification.push_back(curve_ramification(model, i));
  return r;
}

}  // namespace nilverify
