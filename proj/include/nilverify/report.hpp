#pragma once

// Verification reports: one section per certificate, rendered either as text
// or as JSON. Output is a pure function of the configuration and options.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nilverify/certificate.hpp"
#include "nilverify/config.hpp"
#include "nilverify/geometry.hpp"

namespace nilverify {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  Orientation orientation = Orientation::standard;
  /// Label echoed in the report (e.g. the config file name).
  std::string config_name;
  /// Overrides the config form "omega" / "beta" when set.
  std::optional<std::string> omega;
  std::optional<std::string> universal_kernel;
  /// fixed-locus: power of rho.
  long power = 1;
};

struct Section {
  std::string name;
  Certificate certificate;
  Json data = Json::object();
  /// Human-readable body lines.
  std::vector<std::string> text;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Section> sections;
  std::vector<std::string> scope_notes;

  bool passed() const;
  /// 0 when every section passed, 1 otherwise.
  int exit_status() const { return passed() ? 0 : 1; }
  Json to_json() const;
  std::string to_text() const;
};

/// Commands: check, cohomology, invariants, symplectic-check, complex-check,
/// lefschetz, fixed-locus, singular-locus, verify-all. PreconditionError for
/// an unknown command; ParseError for malformed --omega/--universal-kernel.
Report run_command(const std::string& command, const ManifoldConfig& config, const ReportOptions& options);
Report verify_all(const ManifoldConfig& config, const ReportOptions& options = {});
const std::vector<std::string>& command_names();

}  // namespace nilverify
