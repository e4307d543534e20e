// Acceptance gate: runs every end-to-end regression check and prints one
// PASS/FAIL line per check. Exits nonzero if any check fails.
#include <iostream>

#include "g2cal/verify.hpp"

int main() {
  int fails = 0;
  for (const auto& r : g2cal::run_acceptance()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      std::cout << " — " << r.detail;
      ++fails;
    }
    std::cout << "\n";
  }
  if (fails) std::cout << fails << " check(s) failed\n";
  return fails == 0 ? 0 : 1;
}
