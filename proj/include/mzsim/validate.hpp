// Built-in oracle suite: closed-form and conservation checks that a
// correct simulation of the scheme must satisfy. Backs the `validate`
// CLI command; the acceptance tests carry their own independent copies
// of these oracles.

#pragma once

#include <string>
#include <vector>

#include "mzsim/bench_parser.hpp"

namespace mzsim {

struct ValidationCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string op;  // "<=" or ">="
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<WarningLog::Entry> warnings;
  std::size_t wigner_grid_points = 0;  // grid used for the Wigner checks

  bool all_pass() const;
};

// Runs the suite with the document's parameters and arms; the
// interferometer phases are fixed to pi (commutator) and 0
// (anti-commutator) regardless of doc.phase. Wigner checks run on a grid
// capped at 1024 points for runtime.
ValidationReport run_validation(const BenchDocument& doc);

// One "PASS name measured=... threshold=..." line per check.
std::string format_validation_report(const ValidationReport& report);

}  // namespace mzsim
