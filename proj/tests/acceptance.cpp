// Acceptance gate: runs every verification suite at its default bound and
// prints one pass/fail line per criterion.

#include <cstdio>

#include "orna/verify.hpp"

int main() {
  bool all_ok = true;
  int criterion = 0;
  for (const orna::verify::SuiteResult& r : orna::verify::run_all_suites()) {
    ++criterion;
    std::printf("%s criterion %2d [%s]: %s\n", r.passed ? "PASS" : "FAIL", criterion,
                r.name.c_str(), r.summary.c_str());
    if (!r.passed) {
      std::printf("     %s\n", r.detail.c_str());
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}
