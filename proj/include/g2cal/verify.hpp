#pragma once

#include <string>
#include <vector>

namespace g2cal {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failing identity, or a short summary
};

/// Runs the twelve regression criteria. Exceptions inside a check are
/// reported as failures; the vector always has twelve entries in a fixed
/// order.
std::vector<CheckResult> run_acceptance();

}  // namespace g2cal
