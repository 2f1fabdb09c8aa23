#pragma once

// The nine acceptance criteria as executable checks, shared by the self-test
// command and the acceptance test binary.

#include <string>
#include <vector>

namespace spherepde {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Criteria are numbered 1..9.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();
/// "PASS 1 <name>: <detail> (<seconds>s)"
std::string format_result(const CriterionResult& r);

}  // namespace spherepde
