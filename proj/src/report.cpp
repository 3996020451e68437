#include "nilverify/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nilverify/error.hpp"
#include "nilverify/expression.hpp"
#include "nilverify/fixed_locus.hpp"

namespace nilverify {

namespace {

Json tokens(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple_text(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string vector_text(const Vector& v) {
  std::vector<std::string> parts;
  for (const auto& c : v) parts.push_back(c.to_string());
  return "[" + join(parts, ", ") + "]";
}

std::vector<std::string> form_strings(const std::vector<Form>& forms, const GeneratorSet& gens) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(f.to_string(gens));
  return out;
}

// Runs a section body; domain and precondition failures become a failed check
// so the remaining sections still run.
template <class F>
Section guarded(const std::string& name, F&& body) {
  Section s;
  s.name = name;
  s.certificate = Certificate(name);
  try {
    body(s);
  } catch (const PreconditionError& e) {
    s.certificate.record(name + " computed", false, e.what());
  } catch (const DomainError& e) {
    s.certificate.record(name + " computed", false, e.what());
  }
  return s;
}

void adopt(Section& s, const Certificate& c) {
  for (const auto& check : c.checks) s.certificate.record(check.label, check.ok, check.detail);
}

Form named_form(const ManifoldConfig& cfg, const std::optional<std::string>& override_text, const std::string& name) {
  if (override_text) return parse_form(*override_text, cfg.algebra.generators());
  if (const Form* f = cfg.form(name)) return *f;
  throw PreconditionError("configuration defines no form named '" + name + "'");
}

std::string volume_text(const GeneratorSet& gens, Orientation o) {
  std::vector<std::string> parts;
  for (auto g : gens.holomorphic()) parts.push_back("(i " + gens.name(g) + "^" + gens.name(gens.partner(g)) + ")");
  return (o == Orientation::flipped ? "-" : "") + join(parts, "^");
}

void duality_checks(Section& s, const std::vector<std::size_t>& betti) {
  const std::size_t n = betti.size() - 1;
  for (std::size_t k = 0; k <= n / 2; ++k)
    s.certificate.record("b" + std::to_string(k) + " = b" + std::to_string(n - k), betti[k] == betti[n - k],
                         std::to_string(betti[k]) + " vs " + std::to_string(betti[n - k]));
}

void cohomology_body(Section& s, const std::vector<CohomologyBasis>& bases, const GeneratorSet& gens) {
  std::vector<std::size_t> betti;
  Json classes = Json::object();
  for (const auto& b : bases) {
    betti.push_back(b.dimension());
    classes[std::to_string(b.degree())] = form_strings(b.representatives(), gens);
  }
  duality_checks(s, betti);
  s.data["betti"] = betti;
  s.data["classes"] = classes;
  s.text.push_back("betti " + tuple_text(betti));
  for (const auto& b : bases)
    if (b.dimension() > 0)
      s.text.push_back("H^" + std::to_string(b.degree()) + ": " + join(form_strings(b.representatives(), gens), ", "));
}

Section flatness_section(const ManifoldConfig& cfg) {
  return guarded("flatness", [&](Section& s) {
    adopt(s, verify_flatness(cfg.algebra));
    const auto& gens = cfg.algebra.generators();
    Json d = Json::object();
    for (std::size_t g = 0; g < gens.size(); ++g) d[gens.name(g)] = cfg.algebra.generator_differential(g).to_string(gens);
    s.data["differentials"] = d;
  });
}

Section equivariance_section(const ManifoldConfig& cfg) {
  return guarded("equivariance", [&](Section& s) {
    adopt(s, verify_equivariance(cfg.algebra, cfg.action));
    const auto& gens = cfg.algebra.generators();
    Json ev = Json::object();
    for (std::size_t g = 0; g < gens.size(); ++g) ev[gens.name(g)] = cfg.action.eigenvalue(g).to_string();
    s.data["order"] = cfg.action.order();
    s.data["eigenvalues"] = ev;
  });
}

Section integrability_section(const ManifoldConfig& cfg) {
  return guarded("integrability", [&](Section& s) { adopt(s, check_integrability(cfg.algebra)); });
}

Section cohomology_section(const ManifoldConfig& cfg) {
  return guarded("cohomology", [&](Section& s) {
    std::vector<CohomologyBasis> bases;
    for (std::size_t k = 0; k <= cfg.algebra.dimension(); ++k) bases.push_back(cohomology(cfg.algebra, k));
    cohomology_body(s, bases, cfg.algebra.generators());
  });
}

Section invariants_section(const InvariantRing& ring) {
  return guarded("invariant cohomology", [&](Section& s) {
    std::vector<CohomologyBasis> bases;
    for (std::size_t k = 0; k <= ring.top_degree(); ++k) bases.push_back(ring.degree(k));
    cohomology_body(s, bases, ring.spec().generators());
    s.data["order"] = ring.action().order();
  });
}

Section symplectic_section(const ManifoldConfig& cfg, const ReportOptions& opts) {
  return guarded("symplectic", [&](Section& s) {
    const auto& gens = cfg.algebra.generators();
    const Form omega = named_form(cfg, opts.omega, "omega");
    const SymplecticCertificate c = check_symplectic(cfg.algebra, cfg.action, omega, opts.orientation);
    adopt(s, c.checks);
    s.data["omega"] = omega.to_string(gens);
    s.data["volume"] = volume_text(gens, opts.orientation);
    s.data["orientation"] = to_string(opts.orientation);
    s.data["top_coefficient"] = c.top_coefficient.to_string();
    s.data["sign"] = c.sign ? to_string(*c.sign) : "non-real";
    s.data["real"] = c.real;
    s.data["closed"] = c.closed;
    s.data["invariant"] = c.invariant;
    s.data["valid"] = c.valid();
    const std::size_t half = cfg.algebra.dimension() / 2;
    s.text.push_back("omega = " + omega.to_string(gens));
    s.text.push_back("omega^" + std::to_string(half) + " = " + c.top_coefficient.to_string() + " * V,  V = " +
                     volume_text(gens, opts.orientation));
  });
}

Section lefschetz_section(const InvariantRing& ring, const ManifoldConfig& cfg, const ReportOptions& opts) {
  return guarded("lefschetz", [&](Section& s) {
    const auto& gens = cfg.algebra.generators();
    const Form omega = named_form(cfg, opts.omega, "omega");
    const auto& h2 = ring.degree(2);
    const auto& target = ring.degree(ring.top_degree() - 2);
    const Vector cls = h2.coordinates(omega);
    const LefschetzReport r = lefschetz_report(ring, cls);

    s.certificate.record("rank + dim ker = dim H^2", r.rank + r.kernel.size() == r.h2_dimension);
    if (!r.triple_products.empty()) {
      const std::size_t m = r.h2_dimension;
      bool symmetric = true;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = 0; k < m; ++k)
            symmetric = symmetric && r.triple(i, j, k) == r.triple(j, i, k) && r.triple(i, j, k) == r.triple(i, k, j);
      s.certificate.record("T is symmetric", symmetric);
    }

    std::vector<std::string> kernel_forms;
    Json kernel = Json::array();
    for (const auto& v : r.kernel) {
      kernel.push_back({{"coordinates", tokens(v)}, {"form", h2.representative(v).to_string(gens)}});
      kernel_forms.push_back(h2.representative(v).to_string(gens));
    }
    Json matrix = Json::array();
    for (std::size_t i = 0; i < r.map.rows(); ++i) matrix.push_back(tokens(r.map.row(i)));
    Json triples = Json::array();
    const std::size_t m = r.h2_dimension;
    if (!r.triple_products.empty())
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
          for (std::size_t k = j; k < m; ++k)
            if (!r.triple(i, j, k).is_zero())
              triples.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", r.triple(i, j, k).to_string()}});

    s.data["omega"] = omega.to_string(gens);
    s.data["omega_class"] = tokens(cls);
    s.data["h2_basis"] = form_strings(h2.representatives(), gens);
    s.data["target_basis"] = form_strings(target.representatives(), gens);
    s.data["matrix"] = matrix;
    s.data["rank"] = r.rank;
    s.data["kernel"] = kernel;
    s.data["lefschetz_holds"] = r.lefschetz_holds;
    s.data["nonzero_triple_products"] = triples;

    s.text.push_back("[omega] = " + vector_text(cls) + " in basis " + join(form_strings(h2.representatives(), gens), ", "));
    s.text.push_back("rank L = " + std::to_string(r.rank) + " of " + std::to_string(r.h2_dimension) +
                     ", kernel dimension " + std::to_string(r.kernel.size()));
    if (!kernel_forms.empty()) s.text.push_back("kernel: " + join(kernel_forms, "; "));
    s.text.push_back(std::string("hard Lefschetz in degree 2: ") + (r.lefschetz_holds ? "holds" : "fails"));
    for (const auto& t : triples)
      s.text.push_back("T(" + h2.representatives()[t["i"].get<std::size_t>()].to_string(gens) + ", " +
                       h2.representatives()[t["j"].get<std::size_t>()].to_string(gens) + ", " +
                       h2.representatives()[t["k"].get<std::size_t>()].to_string(gens) +
                       ") = " + t["value"].get<std::string>());
  });
}

Section universal_kernel_section(const InvariantRing& ring, const ManifoldConfig& cfg, const ReportOptions& opts) {
  return guarded("universal kernel", [&](Section& s) {
    const auto& gens = cfg.algebra.generators();
    const auto& h2 = ring.degree(2);
    const Form beta = named_form(cfg, opts.universal_kernel, "beta");
    const Vector cls = h2.coordinates(beta);
    const KernelCertificate c = universal_kernel_certificate(ring, cls);
    adopt(s, c.checks);
    const auto search = universal_kernel_search(ring);

    s.data["beta"] = beta.to_string(gens);
    s.data["beta_class"] = tokens(cls);
    s.data["products_checked"] = c.products_checked;
    s.data["pairing_determinant"] = c.pairing_determinant.to_string();
    s.data["granted"] = c.granted();
    Json found = Json::array();
    for (const auto& v : search) found.push_back(h2.representative(v).to_string(gens));
    s.data["universal_kernel_basis"] = found;

    s.text.push_back("beta = " + beta.to_string(gens) + ", [beta] = " + vector_text(cls));
    s.text.push_back(std::to_string(c.products_checked) + " triple products T(beta, a_i, a_j) checked; pairing det = " +
                     c.pairing_determinant.to_string());
    s.text.push_back("universal kernel (all beta with T(beta, ., .) = 0): dimension " + std::to_string(search.size()) +
                     (search.empty() ? "" : ", spanned by " + join(found.get<std::vector<std::string>>(), ", ")));
  });
}

std::string u3_text(const Stratum& s) {
  if (s.u3_free) return "free";
  if (s.u1 || s.u3_slope.is_zero()) return s.u3_offset.to_string();
  return "(" + s.u3_slope.to_string() + ")*u1 + " + s.u3_offset.to_string();
}

Json stratum_json(const Stratum& s) {
  Json j;
  j["kind"] = s.kind();
  j["u1"] = s.u1 ? s.u1->to_string() : "free";
  j["u2"] = s.u2 ? s.u2->to_string() : "free";
  j["u3"] = u3_text(s);
  if (!s.u3_free) {
    j["u3_offset"] = s.u3_offset.to_string();
    j["u3_slope"] = s.u3_slope.to_string();
  }
  j["isotropy"] = s.isotropy.name();
  j["isotropy_elements"] = s.isotropy.elements;
  return j;
}

Json orbits_json(const std::vector<Orbit>& orbits, const std::vector<Stratum>& strata, std::size_t group_order) {
  Json out = Json::array();
  for (const auto& o : orbits)
    out.push_back({{"representative", strata[o.representative].to_string()},
                   {"size", o.members.size()},
                   {"stabilizer_order", group_order / o.members.size()},
                   {"members", o.members}});
  return out;
}

Section fixed_locus_section(const ManifoldConfig& cfg, long k) {
  return guarded("fixed locus", [&](Section& s) {
    const NilmanifoldModel model = cfg.model();
    const auto strata = fixed_strata(model, k);
    std::map<std::string, std::size_t> by_kind, by_isotropy;
    Json list = Json::array();
    bool verified = true, contains_k = true;
    for (const auto& st : strata) {
      ++by_kind[st.kind()];
      ++by_isotropy[st.isotropy.name()];
      verified = verified && verify_stratum(model, k, st);
      contains_k = contains_k && st.isotropy.contains(k);
      list.push_back(stratum_json(st));
    }
    s.certificate.record("every stratum re-verified by rho_power and normalize", verified);
    s.certificate.record("isotropy of every stratum contains " + std::to_string(k), contains_k);
    const auto orbits = orbit_decomposition(model, strata);

    s.data["power"] = k;
    s.data["count"] = strata.size();
    s.data["by_kind"] = by_kind;
    s.data["by_isotropy"] = by_isotropy;
    s.data["strata"] = list;
    s.data["orbits"] = orbits_json(orbits, strata, model.order);

    std::vector<std::string> kinds, isos;
    for (const auto& [name, n] : by_kind) kinds.push_back(std::to_string(n) + " " + name + (n == 1 ? "" : "s"));
    for (const auto& [name, n] : by_isotropy) isos.push_back(name + ": " + std::to_string(n));
    s.text.push_back("Fix(rho^" + std::to_string(k) + "): " + join(kinds, ", ") + "; isotropy " + join(isos, ", ") +
                     "; " + std::to_string(orbits.size()) + " orbits");
    for (const auto& st : strata) s.text.push_back(st.to_string() + "  isotropy " + st.isotropy.name());
  });
}

Section singular_locus_section(const ManifoldConfig& cfg) {
  return guarded("singular locus", [&](Section& s) {
    if (!cfg.lattice) {
      s.text.push_back("no lattice declared; skipped");
      s.data["skipped"] = true;
      return;
    }
    const NilmanifoldModel model = cfg.model();
    const SingularLocusReport r = singular_locus_report(model);

    // Stratification: anything fixed by rho^k is fixed by every power of it.
    bool nested = true;
    for (long k = 1; k < static_cast<long>(model.order); ++k)
      for (const auto& st : fixed_strata(model, k))
        for (long m = 1; m < static_cast<long>(model.order); ++m) nested = nested && st.isotropy.contains(k * m);
    s.certificate.record("Fix(rho^k) lies in Fix(rho^(km)) for all k, m", nested);
    bool special_ok = true;
    for (const auto& sp : r.special_families)
      for (const auto& p : sp.special_points) special_ok = special_ok && p.isotropy.size() > r.families[sp.family].isotropy.size();
    s.certificate.record("special points have larger isotropy than their family", special_ok);

    Json powers = Json::array();
    for (const auto& p : r.powers)
      powers.push_back({{"k", p.k}, {"points", p.points}, {"surfaces", p.surfaces}, {"higher", p.higher}});
    std::map<std::string, std::size_t> iso_points;
    for (const auto& p : r.isolated_points) ++iso_points[p.isotropy.name()];
    Json isolated_list = Json::array();
    for (const auto& p : r.isolated_points) isolated_list.push_back(stratum_json(p));
    Json families = Json::array();
    for (const auto& f : r.families) families.push_back(stratum_json(f));
    Json special = Json::array();
    for (const auto& sp : r.special_families) {
      Json pts = Json::array();
      for (const auto& p : sp.special_points) pts.push_back({{"point", p.to_string()}, {"isotropy", p.isotropy.name()}});
      special.push_back({{"family", r.families[sp.family].to_string()},
                         {"stabilizer_order", sp.stabilizer_order},
                         {"special_points", pts}});
    }
    Json ramification = Json::array();
    for (const auto& c : r.ramification) {
      Json pts = Json::array();
      for (const auto& [u, o] : c.branch_points) pts.push_back({{"u", u.to_string()}, {"order", o}});
      ramification.push_back({{"curve", c.name}, {"degree", c.degree}, {"branch_points", pts}});
    }

    s.data["order"] = r.order;
    s.data["powers"] = powers;
    s.data["isolated_points"] = {{"count", r.isolated_points.size()},
                                 {"orbits", r.isolated_orbits.size()},
                                 {"by_isotropy", iso_points},
                                 {"points", isolated_list},
                                 {"orbit_list", orbits_json(r.isolated_orbits, r.isolated_points, r.order)}};
    s.data["families"] = {{"count", r.families.size()},
                          {"orbits", r.family_orbits.size()},
                          {"free_orbits", r.free_family_orbits},
                          {"list", families},
                          {"orbit_list", orbits_json(r.family_orbits, r.families, r.order)}};
    s.data["special_families"] = special;
    s.data["components"] = {{"count", r.components.size()}, {"orbits", r.component_orbits}, {"groups", r.components}};
    s.data["ramification"] = ramification;

    std::vector<std::string> pw;
    for (const auto& p : r.powers)
      pw.push_back("rho^" + std::to_string(p.k) + ": " + std::to_string(p.points) + " points, " +
                   std::to_string(p.surfaces) + " surfaces");
    s.text.push_back(join(pw, "; "));
    std::vector<std::string> iso;
    for (const auto& [name, n] : iso_points) iso.push_back(std::to_string(n) + " with isotropy " + name);
    s.text.push_back("isolated orbifold points: " + std::to_string(r.isolated_orbits.size()) + " (from " +
                     std::to_string(r.isolated_points.size()) + " points of M" + (iso.empty() ? "" : ", " + join(iso, ", ")) + ")");
    s.text.push_back("surface families: " + std::to_string(r.families.size()) + " labelled, " +
                     std::to_string(r.family_orbits.size()) + " orbits, " + std::to_string(r.free_family_orbits) +
                     " with generic stabiliser");
    for (const auto& sp : r.special_families)
      s.text.push_back("special family " + r.families[sp.family].to_string() + ": stabiliser order " +
                       std::to_string(sp.stabilizer_order) + ", " + std::to_string(sp.special_points.size()) +
                       " points of larger isotropy");
    s.text.push_back("connected components of the fixed surfaces in M: " + std::to_string(r.components.size()) + " (" +
                     std::to_string(r.component_orbits) + " orbits)");
    for (const auto& c : r.ramification) {
      std::vector<std::string> orders;
      for (const auto& bp : c.branch_points) orders.push_back(std::to_string(bp.second));
      s.text.push_back(c.name + ": degree " + std::to_string(c.degree) + ", branch orders (" + join(orders, ", ") + ")");
    }
  });
}

Json inputs_json(const std::string& command, const ManifoldConfig& cfg, const ReportOptions& opts) {
  const auto& gens = cfg.algebra.generators();
  Json in;
  in["command"] = command;
  in["config"] = opts.config_name;
  in["orientation"] = to_string(opts.orientation);
  if (opts.omega) in["omega"] = *opts.omega;
  if (opts.universal_kernel) in["universal_kernel"] = *opts.universal_kernel;
  if (command == "fixed-locus") in["power"] = opts.power;
  in["field_roots"] = cfg.root_order;
  in["generators"] = gens.names();
  Json d = Json::object();
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (!cfg.algebra.generator_differential(g).is_zero())
      d[gens.name(g)] = cfg.algebra.generator_differential(g).to_string(gens);
  in["differentials"] = d;
  Json ev = Json::object();
  for (std::size_t g = 0; g < gens.size(); ++g) ev[gens.name(g)] = cfg.action.eigenvalue(g).to_string();
  in["action"] = {{"order", cfg.action.order()}, {"eigenvalues", ev}};
  Json forms = Json::object();
  for (const auto& [name, f] : cfg.forms) forms[name] = f.to_string(gens);
  in["forms"] = forms;
  if (cfg.lattice) {
    std::vector<std::string> coords;
    for (auto c : cfg.lattice->coordinates) coords.push_back(gens.name(c));
    in["lattice"] = {{"group", cfg.lattice->group}, {"coordinates", coords}};
  }
  return in;
}

std::vector<std::string> scope_notes(const ManifoldConfig& cfg, const ReportOptions& opts) {
  const auto& gens = cfg.algebra.generators();
  return {
      "machine-checked: exact arithmetic over Q(zeta_12) on M (left-invariant forms, whose cohomology is the de Rham "
      "cohomology of the nilmanifold) and on the orbifold quotient M^ = M/Z_" +
          std::to_string(cfg.action.order()),
      "H*(M^) is computed as the invariant part H*(M)^Z_" + std::to_string(cfg.action.order()),
      "asserted, not machine-checked: statements about the resolution M~ (simple connectivity, the diffeomorphism "
      "between complex and symplectic resolutions, the exceptional classes in H^2(M~)); the non-Kahler conclusion for "
      "M~ rests on them together with the certificates above",
      "top-degree signs are relative to V = " + volume_text(gens, opts.orientation) + " (" + to_string(opts.orientation) +
          " orientation)",
  };
}

std::optional<InvariantRing> try_ring(const ManifoldConfig& cfg, const ReportOptions& opts, Section& failure) {
  try {
    return InvariantRing(cfg.algebra, cfg.action, opts.orientation);
  } catch (const PreconditionError& e) {
    failure.certificate.record(failure.name + " computed", false, e.what());
  }
  return std::nullopt;
}

template <class F>
void with_ring(Report& r, const ManifoldConfig& cfg, const ReportOptions& opts, std::vector<std::string> names, F&& body) {
  Section failure;
  failure.name = names.front();
  failure.certificate = Certificate(failure.name);
  if (auto ring = try_ring(cfg, opts, failure)) {
    body(*ring);
    return;
  }
  for (const auto& n : names) {
    Section s = failure;
    s.name = n;
    s.certificate.name = n;
    r.sections.push_back(s);
  }
}

}  // namespace

bool Report::passed() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.certificate.passed; });
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["inputs"] = inputs;
  Json secs = Json::array();
  for (const auto& s : sections) {
    Json checks = Json::array();
    for (const auto& c : s.certificate.checks) {
      Json cj = {{"label", c.label}, {"ok", c.ok}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    Json sj = {{"name", s.name}, {"passed", s.certificate.passed}, {"checks", checks}};
    if (s.certificate.witness) sj["witness"] = *s.certificate.witness;
    sj["data"] = s.data;
    secs.push_back(sj);
  }
  out["sections"] = secs;
  out["scope_notes"] = scope_notes;
  Json status = {{"passed", passed()}, {"exit_code", exit_status()}};
  for (const auto& s : sections)
    if (!s.certificate.passed) {
      status["first_failure"] = s.name + ": " + s.certificate.witness.value_or("failed");
      break;
    }
  out["status"] = status;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "nilverify " << command;
  if (inputs.contains("config") && !inputs["config"].get<std::string>().empty())
    out << "  config " << inputs["config"].get<std::string>();
  out << "  orientation " << inputs.value("orientation", "standard") << "\n";
  for (const auto& s : sections) {
    out << "\n[" << (s.certificate.passed ? "PASS" : "FAIL") << "] " << s.name << "\n";
    for (const auto& c : s.certificate.checks) {
      out << "    " << (c.ok ? "ok    " : "FAILED") << " " << c.label;
      if (!c.detail.empty() && (!c.ok || c.label.find("!=") != std::string::npos)) out << "  (" << c.detail << ")";
      out << "\n";
    }
    for (const auto& line : s.text) out << "  " << line << "\n";
  }
  out << "\nscope:\n";
  for (const auto& n : scope_notes) out << "  - " << n << "\n";
  out << "\nstatus: " << (passed() ? "PASS" : "FAIL") << " (exit " << exit_status() << ")\n";
  for (const auto& s : sections)
    if (!s.certificate.passed) {
      out << "first failure: " << s.name << ": " << s.certificate.witness.value_or("failed") << "\n";
      break;
    }
  return out.str();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check",     "cohomology",  "invariants",     "symplectic-check",
                                              "complex-check", "lefschetz", "fixed-locus", "singular-locus",
                                              "verify-all"};
  return names;
}

Report verify_all(const ManifoldConfig& config, const ReportOptions& options) {
  return run_command("verify-all", config, options);
}

Report run_command(const std::string& command, const ManifoldConfig& cfg, const ReportOptions& opts) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end())
    throw PreconditionError("unknown command '" + command + "'");
  // Malformed expressions are input errors, not verification failures.
  if (opts.omega) (void)parse_form(*opts.omega, cfg.algebra.generators());
  if (opts.universal_kernel) (void)parse_form(*opts.universal_kernel, cfg.algebra.generators());

  Report r;
  r.command = command;
  r.inputs = inputs_json(command, cfg, opts);
  r.scope_notes = scope_notes(cfg, opts);

  if (command == "check") {
    r.sections.push_back(flatness_section(cfg));
    r.sections.push_back(equivariance_section(cfg));
    r.sections.push_back(integrability_section(cfg));
  } else if (command == "cohomology") {
    r.sections.push_back(cohomology_section(cfg));
  } else if (command == "invariants") {
    with_ring(r, cfg, opts, {"invariant cohomology"}, [&](const InvariantRing& ring) {
      r.sections.push_back(invariants_section(ring));
    });
  } else if (command == "symplectic-check") {
    r.sections.push_back(symplectic_section(cfg, opts));
  } else if (command == "complex-check") {
    r.sections.push_back(integrability_section(cfg));
  } else if (command == "lefschetz") {
    const bool kernel = opts.universal_kernel.has_value();
    with_ring(r, cfg, opts, {kernel ? "universal kernel" : "lefschetz"}, [&](const InvariantRing& ring) {
      r.sections.push_back(kernel ? universal_kernel_section(ring, cfg, opts) : lefschetz_section(ring, cfg, opts));
    });
  } else if (command == "fixed-locus") {
    r.sections.push_back(fixed_locus_section(cfg, opts.power));
  } else if (command == "singular-locus") {
    r.sections.push_back(singular_locus_section(cfg));
  } else {
    r.sections.push_back(flatness_section(cfg));
    r.sections.push_back(equivariance_section(cfg));
    r.sections.push_back(cohomology_section(cfg));
    with_ring(r, cfg, opts, {"invariant cohomology"}, [&](const InvariantRing& ring) {
      r.sections.push_back(invariants_section(ring));
    });
    r.sections.push_back(symplectic_section(cfg, opts));
    r.sections.push_back(integrability_section(cfg));
    with_ring(r, cfg, opts, {"lefschetz", "universal kernel"}, [&](const InvariantRing& ring) {
      r.sections.push_back(lefschetz_section(ring, cfg, opts));
      r.sections.push_back(universal_kernel_section(ring, cfg, opts));
    });
    r.sections.push_back(singular_locus_section(cfg));
  }
  return r;
}

}  // namespace nilverify
