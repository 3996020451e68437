#include "nilverify/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nilverify/error.hpp"
#include "nilverify/expression.hpp"

namespace nilverify {

std::string to_string(ConfigErrorKind k) {
  switch (k) {
    case ConfigErrorKind::io: return "io";
    case ConfigErrorKind::syntax: return "syntax";
    case ConfigErrorKind::unknown_section: return "unknown-section";
    case ConfigErrorKind::unknown_key: return "unknown-key";
    case ConfigErrorKind::duplicate: return "duplicate";
    case ConfigErrorKind::unknown_generator: return "unknown-generator";
    case ConfigErrorKind::generators: return "generators";
    case ConfigErrorKind::field: return "field";
    case ConfigErrorKind::non_root_of_unity: return "non-root-of-unity";
    case ConfigErrorKind::order_mismatch: return "order-mismatch";
    case ConfigErrorKind::conjugation: return "conjugation";
    case ConfigErrorKind::flatness: return "flatness";
    case ConfigErrorKind::equivariance: return "equivariance";
    case ConfigErrorKind::lattice: return "lattice";
  }
  return "unknown";
}

namespace {

std::string format_error(ConfigErrorKind kind, std::size_t line, std::size_t column, const std::string& message) {
  std::string where;
  if (line > 0) where = "line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : "") + ": ";
  return where + to_string(kind) + ": " + message;
}

}  // namespace

ConfigError::ConfigError(ConfigErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(format_error(kind, line, column, message)),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

const Form* ManifoldConfig::form(std::string_view name) const {
  for (const auto& [n, f] : forms)
    if (n == name) return &f;
  return nullptr;
}

NilmanifoldModel ManifoldConfig::model() const {
  if (!lattice) throw PreconditionError("configuration declares no lattice");
  NilmanifoldModel m;
  m.twist = lattice->group == "heisenberg" ? 1 : 0;
  m.order = action.order();
  for (std::size_t i = 0; i < 3; ++i) m.multipliers[i] = action.eigenvalue(lattice->coordinates[i]);
  return m;
}

namespace {

using Kind = ConfigErrorKind;

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t key_column = 0;
  std::size_t value_column = 0;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::pair<std::size_t, std::size_t> trim_bounds(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {b, e};
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_identifier(std::string_view s, bool allow_tilde) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_tilde && s[0] == '~') ++i;
  if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

const std::set<std::string>& known_sections() {
  static const std::set<std::string> s{"field", "generators", "algebra", "action", "forms", "lattice"};
  return s;
}

std::vector<Entry> tokenize(std::string_view text, std::map<std::string, std::size_t>& section_lines) {
  std::vector<Entry> out;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::set<std::pair<std::string, std::string>> seen;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::size_t comment = line.find_first_of("#;");
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    const auto [b, e] = trim_bounds(line);
    if (b == e) continue;
    const std::string_view body = line.substr(b, e - b);
    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError(Kind::syntax, line_no, b + 1, "unterminated section header");
      const auto [sb, se] = trim_bounds(body.substr(1, body.size() - 2));
      section = std::string(body.substr(1 + sb, se - sb));
      if (!known_sections().count(section))
        throw ConfigError(Kind::unknown_section, line_no, b + 1, "unknown section [" + section + "]");
      if (!section_lines.emplace(section, line_no).second)
        throw ConfigError(Kind::duplicate, line_no, b + 1, "section [" + section + "] appears twice");
      continue;
    }
    if (section.empty()) throw ConfigError(Kind::syntax, line_no, b + 1, "entry outside any section");
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(Kind::syntax, line_no, b + 1, "expected 'key = value'");
    const auto [kb, ke] = trim_bounds(line.substr(0, eq));
    const auto [vb, ve] = trim_bounds(line.substr(eq + 1));
    Entry entry;
    entry.section = section;
    entry.key = std::string(line.substr(kb, ke - kb));
    entry.value = std::string(line.substr(eq + 1 + vb, ve - vb));
    entry.line = line_no;
    entry.key_column = kb + 1;
    entry.value_column = eq + 1 + vb + 1;
    // Normalise internal whitespace of two-word keys ("d  theta").
    const auto kw = words(entry.key);
    if (kw.empty()) throw ConfigError(Kind::syntax, line_no, b + 1, "missing key");
    entry.key.clear();
    for (std::size_t i = 0; i < kw.size(); ++i) entry.key += (i ? " " : "") + kw[i];
    if (entry.value.empty()) throw ConfigError(Kind::syntax, line_no, entry.value_column, "missing value");
    if (!seen.emplace(section, entry.key).second)
      throw ConfigError(Kind::duplicate, line_no, entry.key_column, "'" + entry.key + "' is set twice in [" + section + "]");
    out.push_back(std::move(entry));
  }
  return out;
}

bool in_subfield(const CycloScalar& a, long n) {
  for (int k : {5, 7, 11})
    if (k % n == 1 % n && !(galois(a, k) == a)) return false;
  return true;
}

void require_subfield(const Form& f, long n, const Entry& e) {
  for (const auto& [m, c] : f.terms())
    if (!in_subfield(c, n))
      throw ConfigError(Kind::field, e.line, e.value_column,
                        "coefficient " + c.to_string() + " does not lie in Q(zeta_" + std::to_string(n) + ")");
}

Form parse_form_at(const Entry& e, const GeneratorSet& gens) {
  try {
    return parse_form(e.value, gens);
  } catch (const ParseError& err) {
    throw ConfigError(err.unknown_name() ? Kind::unknown_generator : Kind::syntax, e.line, e.value_column + err.column(),
                      err.what());
  }
}

CycloScalar parse_scalar_at(const Entry& e) {
  try {
    return parse_scalar(e.value);
  } catch (const ParseError& err) {
    throw ConfigError(err.unknown_name() ? Kind::unknown_generator : Kind::syntax, e.line, e.value_column + err.column(),
                      err.what());
  }
}

long parse_positive(const Entry& e) {
  long v = 0;
  std::size_t used = 0;
  try {
    v = std::stol(e.value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != e.value.size() || v <= 0)
    throw ConfigError(Kind::syntax, e.line, e.value_column, "expected a positive integer, got '" + e.value + "'");
  return v;
}

// "d theta" / "rho mu": the generator named after the prefix.
std::size_t keyed_generator(const Entry& e, std::string_view prefix, const GeneratorSet& gens) {
  const auto kw = words(e.key);
  if (kw.size() != 2 || kw[0] != prefix)
    throw ConfigError(Kind::unknown_key, e.line, e.key_column,
                      "unknown key '" + e.key + "' in [" + e.section + "] (expected '" + std::string(prefix) + " <generator>')");
  const auto idx = gens.index_of(kw[1]);
  if (!idx)
    throw ConfigError(Kind::unknown_generator, e.line, e.key_column + e.key.find(kw[1]),
                      "unknown generator '" + kw[1] + "'");
  return *idx;
}

struct Parsed {
  std::vector<Entry> entries;
  std::map<std::string, std::size_t> section_lines;

  std::vector<const Entry*> section(const std::string& name) const {
    std::vector<const Entry*> out;
    for (const auto& e : entries)
      if (e.section == name) out.push_back(&e);
    return out;
  }
  const Entry* find(const std::string& sec, const std::string& key) const {
    for (const auto& e : entries)
      if (e.section == sec && e.key == key) return &e;
    return nullptr;
  }
  std::size_t line_of(const std::string& sec) const {
    const auto it = section_lines.find(sec);
    return it == section_lines.end() ? 0 : it->second;
  }
};

void reject_unknown_keys(const Parsed& p, const std::string& sec, std::initializer_list<const char*> keys) {
  for (const auto* e : p.section(sec))
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return e->key == k; }))
      throw ConfigError(Kind::unknown_key, e->line, e->key_column, "unknown key '" + e->key + "' in [" + sec + "]");
}

long parse_field(const Parsed& p) {
  reject_unknown_keys(p, "field", {"roots"});
  const Entry* e = p.find("field", "roots");
  if (!e) return CycloScalar::kRootOrder;
  const long n = parse_positive(*e);
  if (CycloScalar::kRootOrder % n != 0)
    throw ConfigError(Kind::field, e->line, e->value_column,
                      "root order " + std::to_string(n) + " does not divide " + std::to_string(CycloScalar::kRootOrder));
  return n;
}

GeneratorSet parse_generators(const Parsed& p) {
  reject_unknown_keys(p, "generators", {"holomorphic", "conjugate", "order"});
  const Entry* hol = p.find("generators", "holomorphic");
  if (!hol) throw ConfigError(Kind::generators, p.line_of("generators"), 0, "missing 'holomorphic' generator list");
  const auto h = words(hol->value);
  std::vector<std::string> c;
  const Entry* conj_entry = p.find("generators", "conjugate");
  if (conj_entry) {
    c = words(conj_entry->value);
    if (c.size() != h.size())
      throw ConfigError(Kind::generators, conj_entry->line, conj_entry->value_column,
                        "conjugate list has " + std::to_string(c.size()) + " names, expected " + std::to_string(h.size()));
  } else {
    for (const auto& name : h) c.push_back("~" + name);
  }
  std::vector<std::string> order;
  const Entry* order_entry = p.find("generators", "order");
  if (order_entry) {
    order = words(order_entry->value);
  } else {
    order = h;
    order.insert(order.end(), c.begin(), c.end());
  }
  const Entry* at = order_entry ? order_entry : hol;
  for (const auto& name : order)
    if (!is_identifier(name, true) || is_reserved_name(name))
      throw ConfigError(Kind::generators, at->line, at->value_column + at->value.find(name),
                        "'" + name + "' is not a valid generator name");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < h.size(); ++i) pairs.emplace_back(h[i], c[i]);
  try {
    return GeneratorSet(order, pairs);
  } catch (const std::exception& err) {
    throw ConfigError(Kind::generators, at->line, at->value_column, err.what());
  }
}

struct AlgebraParse {
  std::vector<Form> differentials;
  std::vector<const Entry*> source;  // entry that determined d(g), possibly via the partner
};

AlgebraParse parse_algebra(const Parsed& p, const GeneratorSet& gens, long roots) {
  const std::size_t n = gens.size();
  std::vector<std::optional<Form>> given(n);
  std::vector<const Entry*> given_at(n, nullptr);
  for (const auto* e : p.section("algebra")) {
    const std::size_t g = keyed_generator(*e, "d", gens);
    Form f = parse_form_at(*e, gens);
    if (!f.is_zero() && f.degree() != std::optional<std::size_t>(2))
      throw ConfigError(Kind::syntax, e->line, e->value_column, "d " + gens.name(g) + " must be a 2-form");
    require_subfield(f, roots, *e);
    given[g] = std::move(f);
    given_at[g] = e;
  }
  AlgebraParse out{std::vector<Form>(n), std::vector<const Entry*>(n, nullptr)};
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t q = gens.partner(g);
    if (given[g]) {
      out.differentials[g] = *given[g];
      out.source[g] = given_at[g];
      if (given[q] && !(conj_form(gens, *given[q]) == *given[g])) {
        const Entry* later = given_at[g]->line > given_at[q]->line ? given_at[g] : given_at[q];
        throw ConfigError(Kind::conjugation, later->line, later->value_column,
                          "d " + gens.name(g) + " is not the conjugate of d " + gens.name(q));
      }
    } else if (given[q]) {
      out.differentials[g] = conj_form(gens, *given[q]);
      out.source[g] = given_at[q];
    }
  }
  return out;
}

struct ActionParse {
  std::size_t order = 1;
  std::vector<CycloScalar> eigenvalues;
  std::vector<const Entry*> source;
  const Entry* order_entry = nullptr;
};

ActionParse parse_action(const Parsed& p, const GeneratorSet& gens, long roots) {
  const std::size_t n = gens.size();
  ActionParse out;
  out.eigenvalues.assign(n, CycloScalar(1));
  out.source.assign(n, nullptr);
  std::vector<bool> given(n, false);
  for (const auto* e : p.section("action")) {
    if (e->key == "order") {
      out.order_entry = e;
      continue;
    }
    const std::size_t g = keyed_generator(*e, "rho", gens);
    const CycloScalar v = parse_scalar_at(*e);
    if (!in_subfield(v, roots))
      throw ConfigError(Kind::field, e->line, e->value_column,
                        v.to_string() + " does not lie in Q(zeta_" + std::to_string(roots) + ")");
    if (!multiplicative_order(v))
      throw ConfigError(Kind::non_root_of_unity, e->line, e->value_column,
                        "eigenvalue of " + gens.name(g) + " (" + v.to_string() + ") is not a root of unity");
    out.eigenvalues[g] = v;
    out.source[g] = e;
    given[g] = true;
  }
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t q = gens.partner(g);
    if (given[g] && given[q] && !(conj(out.eigenvalues[q]) == out.eigenvalues[g])) {
      const Entry* later = out.source[g]->line > out.source[q]->line ? out.source[g] : out.source[q];
      throw ConfigError(Kind::conjugation, later->line, later->value_column,
                        "eigenvalue of " + gens.name(g) + " is not the conjugate of that of " + gens.name(q));
    }
    if (!given[g] && given[q]) {
      out.eigenvalues[g] = conj(out.eigenvalues[q]);
      out.source[g] = out.source[q];
    }
  }
  long lcm = 1;
  for (const auto& v : out.eigenvalues) lcm = std::lcm(lcm, static_cast<long>(*multiplicative_order(v)));
  out.order = out.order_entry ? static_cast<std::size_t>(parse_positive(*out.order_entry)) : static_cast<std::size_t>(lcm);
  for (std::size_t g = 0; g < n; ++g) {
    const auto ord = static_cast<std::size_t>(*multiplicative_order(out.eigenvalues[g]));
    if (out.order % ord != 0) {
      const Entry* e = out.source[g];
      throw ConfigError(Kind::order_mismatch, e->line, e->value_column,
                        "eigenvalue of " + gens.name(g) + " has order " + std::to_string(ord) +
                            ", which does not divide the action order " + std::to_string(out.order));
    }
  }
  return out;
}

std::vector<std::pair<std::string, Form>> parse_forms(const Parsed& p, const GeneratorSet& gens, long roots) {
  std::vector<std::pair<std::string, Form>> out;
  for (const auto* e : p.section("forms")) {
    if (!is_identifier(e->key, false) || is_reserved_name(e->key) || gens.index_of(e->key))
      throw ConfigError(Kind::unknown_key, e->line, e->key_column, "'" + e->key + "' is not a valid form name");
    Form f = parse_form_at(*e, gens);
    require_subfield(f, roots, *e);
    out.emplace_back(e->key, std::move(f));
  }
  return out;
}

std::optional<LatticeDecl> parse_lattice(const Parsed& p, const AlgebraSpec& spec, const ActionSpec& action) {
  if (!p.section_lines.count("lattice")) return std::nullopt;
  reject_unknown_keys(p, "lattice", {"group", "coordinates", "basis"});
  const std::size_t header = p.line_of("lattice");
  const auto& gens = spec.generators();
  const Entry* group = p.find("lattice", "group");
  if (!group) throw ConfigError(Kind::lattice, header, 0, "missing 'group'");
  if (group->value != "heisenberg" && group->value != "abelian")
    throw ConfigError(Kind::lattice, group->line, group->value_column,
                      "group must be 'heisenberg' or 'abelian', got '" + group->value + "'");
  if (const Entry* basis = p.find("lattice", "basis"); basis && words(basis->value) != std::vector<std::string>{"1", "z6"})
    throw ConfigError(Kind::lattice, basis->line, basis->value_column, "only the Eisenstein basis '1 z6' is supported");

  LatticeDecl decl;
  decl.group = group->value;
  const Entry* coords = p.find("lattice", "coordinates");
  const auto hol = gens.holomorphic();
  if (coords) {
    const auto names = words(coords->value);
    if (names.size() != 3)
      throw ConfigError(Kind::lattice, coords->line, coords->value_column, "exactly three coordinates are required");
    for (std::size_t i = 0; i < 3; ++i) {
      const auto idx = gens.index_of(names[i]);
      if (!idx)
        throw ConfigError(Kind::unknown_generator, coords->line, coords->value_column + coords->value.find(names[i]),
                          "unknown generator '" + names[i] + "'");
      if (gens.type(*idx) != GeneratorType::holomorphic)
        throw ConfigError(Kind::lattice, coords->line, coords->value_column + coords->value.find(names[i]),
                          "coordinate '" + names[i] + "' is not a (1,0) generator");
      decl.coordinates[i] = *idx;
    }
  } else {
    if (hol.size() != 3) throw ConfigError(Kind::lattice, header, 0, "lattice models need three (1,0) generators");
    std::copy(hol.begin(), hol.end(), decl.coordinates.begin());
  }
  if (hol.size() != 3 || gens.size() != 6)
    throw ConfigError(Kind::lattice, header, 0, "lattice models need three (1,0) generators and their conjugates");

  const auto [a, b, c] = decl.coordinates;
  const bool abelian_ok = spec.generator_differential(a).is_zero() && spec.generator_differential(b).is_zero();
  const Form expected = decl.group == "heisenberg" ? wedge(Form::generator(a), Form::generator(b)) : Form();
  if (!abelian_ok || !(spec.generator_differential(c) == expected))
    throw ConfigError(Kind::lattice, group->line, group->value_column,
                      "structure equations do not match the " + decl.group + " group law (expected d " + gens.name(c) +
                          " = " + (expected.is_zero() ? std::string("0") : expected.to_string(gens)) + ")");

  ManifoldConfig probe{CycloScalar::kRootOrder, spec, action, {}, decl};
  try {
    probe.model().validate();
  } catch (const PreconditionError& err) {
    throw ConfigError(Kind::lattice, group->line, group->value_column, err.what());
  }
  return decl;
}

}  // namespace

ManifoldConfig parse_config(std::string_view text) {
  Parsed p;
  p.entries = tokenize(text, p.section_lines);
  const long roots = parse_field(p);
  const GeneratorSet gens = parse_generators(p);

  const AlgebraParse alg = parse_algebra(p, gens, roots);
  const AlgebraSpec spec(gens, alg.differentials);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Form dd = differential(spec, spec.generator_differential(g));
    if (!dd.is_zero()) {
      const Entry* e = alg.source[g];
      throw ConfigError(Kind::flatness, e ? e->line : 0, e ? e->value_column : 0,
                        "d^2 != 0: d(d " + gens.name(g) + ") = " + dd.to_string(gens));
    }
  }

  const ActionParse act_parse = parse_action(p, gens, roots);
  const ActionSpec action(act_parse.order, act_parse.eigenvalues, gens);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Form x = Form::generator(g);
    const Form lhs = act(action, 1, differential(spec, x));
    const Form rhs = differential(spec, act(action, 1, x));
    if (!(lhs == rhs)) {
      const Entry* e = act_parse.source[g] ? act_parse.source[g] : alg.source[g];
      throw ConfigError(Kind::equivariance, e ? e->line : p.line_of("action"), e ? e->value_column : 0,
                        "rho^* d " + gens.name(g) + " != d rho^* " + gens.name(g) + ": rho^* d " + gens.name(g) +
                            " = " + lhs.to_string(gens) + ", d rho^* " + gens.name(g) + " = " + rhs.to_string(gens));
    }
  }

  auto forms = parse_forms(p, gens, roots);
  auto lattice = parse_lattice(p, spec, action);
  return ManifoldConfig{roots, spec, action, std::move(forms), std::move(lattice)};
}

ManifoldConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(Kind::io, 0, 0, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace nilverify
