#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epibohm::verify {

/// One acceptance criterion: a named check with a hard tolerance and a wall
/// clock budget.  detail carries the worst measured quantity so a failure is
/// diagnosable from the one-line report.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

/// Runs the full acceptance suite in order.  Each criterion is evaluated at
/// its stated tolerance; a tolerance or time-budget violation fails the
/// criterion.
std::vector<CriterionResult> run_all();

/// Runs the suite and prints one pass/fail line per criterion.  Returns the
/// number of failed criteria (0 == accept).
int run_and_report(std::ostream& out);

}  // namespace epibohm::verify
