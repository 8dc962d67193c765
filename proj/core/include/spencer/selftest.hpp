#pragma once

#include <string>
#include <vector>

namespace spencer {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  unsigned long long seed = 20240901;
  /// Negative control: run with a sign error injected into the Newton identities.
  bool corrupt_newton = false;
};

std::vector<SelftestResult> run_selftest(const SelftestOptions& options = {});

/// One "PASS name" / "FAIL name: detail" line per invariant plus a summary line.
std::string format_selftest(const std::vector<SelftestResult>& results);

bool all_passed(const std::vector<SelftestResult>& results);

}  // namespace spencer
