#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilverify {

struct Check {
  std::string label;
  bool ok;
  std::string detail;
};

/// Outcome of a verification: every identity checked, plus the first
/// failing one as the witness.
struct Certificate {
  Certificate() = default;
  explicit Certificate(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::vector<Check> checks;
  std::optional<std::string> witness;

  void record(std::string label, bool ok, std::string detail = {}) {
    if (!ok && passed) {
      passed = false;
      witness = label + (detail.empty() ? "" : ": " + detail);
    }
    checks.push_back({std::move(label), ok, std::move(detail)});
  }
};

}  // namespace nilverify
