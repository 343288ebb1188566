#pragma once

#include <string>
#include <vector>

namespace cvqt {

// End-to-end acceptance checks, shared by the test driver and the CLI
// verify command.  Each criterion reports one headline number against one
// bound; the detail string spells out what was measured.

enum class AcceptanceMode {
  fast,  // trimmed sampling, same tolerances; meant to finish within a minute
  full   // the reference sizes
};

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  double measured;
  double bound;
  std::string detail;
  double seconds;
};

std::vector<CriterionResult> run_acceptance(AcceptanceMode mode);

}  // namespace cvqt
