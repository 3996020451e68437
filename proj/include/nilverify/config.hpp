#pragma once

// Declarative manifold description.
//
//   [field]       roots = 12                  N dividing 12; scalars must lie in Q(zeta_N)
//   [generators]  holomorphic = mu nu theta
//                 conjugate = ~mu ~nu ~theta  (default: "~" + name)
//                 order = ...                 (default: holomorphic, then conjugates)
//   [algebra]     d theta = mu^nu             omitted differentials are zero; the
//                                             conjugate differential is inferred
//   [action]      order = 6
//                 rho mu = z6^4               omitted eigenvalues are 1; conjugates inferred
//   [forms]       omega = -z^3*mu^~mu + nu^theta + ~nu^~theta
//   [lattice]     group = heisenberg | abelian
//                 coordinates = mu nu theta   duals of u1, u2, u3
//                 basis = 1 z6
//
// '#' and ';' start comments. Parsing succeeds only if the algebra is flat
// and the action commutes with d.

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilverify/ce_complex.hpp"
#include "nilverify/equivariance.hpp"
#include "nilverify/fixed_locus.hpp"

namespace nilverify {

enum class ConfigErrorKind {
  io,
  syntax,
  unknown_section,
  unknown_key,
  duplicate,
  unknown_generator,
  generators,
  field,
  non_root_of_unity,
  order_mismatch,
  conjugation,
  flatness,
  equivariance,
  lattice,
};
std::string to_string(ConfigErrorKind k);

class ConfigError : public std::runtime_error {
 public:
  /// line and column are 1-based; 0 means "not tied to a position".
  ConfigError(ConfigErrorKind kind, std::size_t line, std::size_t column, const std::string& message);
  ConfigErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  ConfigErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct LatticeDecl {
  std::string group;
  /// Generator indices dual to u1, u2, u3.
  std::array<std::size_t, 3> coordinates{};
};

struct ManifoldConfig {
  long root_order = 12;
  AlgebraSpec algebra;
  ActionSpec action;
  /// Named forms in declaration order.
  std::vector<std::pair<std::string, Form>> forms;
  std::optional<LatticeDecl> lattice;

  const Form* form(std::string_view name) const;
  /// Lattice model for the fixed-locus engine; PreconditionError without a lattice.
  NilmanifoldModel model() const;
};

ManifoldConfig parse_config(std::string_view text);
/// Reads and parses a file; ConfigError(io) if it cannot be read.
ManifoldConfig load_config(const std::filesystem::path& path);

}  // namespace nilverify
