#pragma once

#include <string>
#include <vector>

namespace coct {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Exhaustive algebra and lattice invariants over all labels up to max_k,
/// plus a small solver-versus-brute-force sweep.
std::vector<CheckResult> run_selfcheck(int max_k);

}  // namespace coct
