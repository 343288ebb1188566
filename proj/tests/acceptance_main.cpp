// Acceptance driver: runs every end-to-end criterion and prints one line per
// check. Exits nonzero if any of them fails. Pass --fast for the trimmed
// sampling sizes (same tolerances, smaller grids).
#include <cstdio>
#include <cstring>

#include "cvqt/acceptance.hpp"

int main(int argc, char** argv) {
  cvqt::AcceptanceMode mode = cvqt::AcceptanceMode::full;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) {
      mode = cvqt::AcceptanceMode::fast;
    } else {
      std::fprintf(stderr, "usage: %s [--fast]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<cvqt::CriterionResult> results = cvqt::run_acceptance(mode);
  int failures = 0;
  double total = 0.0;
  for (const cvqt::CriterionResult& r : results) {
    if (!r.pass) ++failures;
    total += r.seconds;
    std::printf("[%s] %2d %-22s measured %.6g against %.6g (%.2fs)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.measured, r.bound,
                r.seconds);
    std::printf("         %s\n", r.detail.c_str());
  }
  std::printf("%zu criteria, %d failed, %.1fs %s\n", results.size(), failures, total,
              mode == cvqt::AcceptanceMode::fast ? "(fast mode)" : "(full mode)");
  return failures == 0 ? 0 : 1;
}
