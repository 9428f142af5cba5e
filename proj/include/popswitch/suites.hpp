// Named verification suites run by `popswitch verify`.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "popswitch/qarith.hpp"

namespace popswitch {

struct CheckResult {
  std::string id;
  bool passed = false;
  double elapsed_ms = 0;
  std::string detail;  // counterexample on failure, extra facts on success
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// One line per check plus a summary. Timings are left out so the text is
  /// reproducible.
  std::string to_text() const;
};

struct SuiteOptions {
  /// Upper size bound; each suite has its own default.
  std::optional<int> max_n;
  /// Numeric pre-screen point for the quantum identities.
  std::optional<Rational> q0;
};

/// qidentities, tl, jw, otl, karoubi, all.
const std::vector<std::string>& suite_names();
int default_max(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite or a bound out of the
/// suite's range.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options = {});

}  // namespace popswitch
