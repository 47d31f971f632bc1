#pragma once

#include <string>
#include <vector>

namespace umbral {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the library's algebraic and numerical invariants (the CLI `check` command).
std::vector<CheckResult> run_invariant_checks();

}  // namespace umbral
