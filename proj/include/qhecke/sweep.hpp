#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qhecke {

struct SweepResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Bulk property suites over all compositions/permutations up to size n.
/// Each entry runs independently; failures carry a short diagnostic.
std::vector<SweepResult> run_sweep(int n);

}  // namespace qhecke
