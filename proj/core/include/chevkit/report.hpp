#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevkit/gf2m.hpp"
#include "chevkit/rootsys.hpp"

namespace chevkit {

struct CheckResult {
  std::string id;
  std::string description;
  std::string anchor;
  bool pass = false;
  std::string details;
  double elapsed_ms = 0;
};

struct VerificationReport {
  static constexpr int kVersion = 1;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0 && !checks.empty(); }
  /// {version, checks:[{id, anchor, status, details}], summary:{pass, fail}};
  /// per-check times go to a separate "timing" object only on request.
  std::string to_json(bool with_timing = false) const;
  std::string to_text(bool with_timing = false) const;
};

struct VerifyOptions {
  /// Field for the second brute-force conjugacy search.
  GF2m brute_field = GF2m::with_degree(2);  // GF(4)
  /// Replaces the bundled root table.
  std::optional<LabelTable> table;
};

/// Runs the whole E7 pipeline. A failing or throwing check becomes a FAIL
/// entry and the remaining checks still run.
VerificationReport verify_paper(const VerifyOptions& options = {});

/// Stable identifiers of the checks, in report order.
std::vector<std::string> check_ids();

}  // namespace chevkit
