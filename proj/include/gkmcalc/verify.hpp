#pragma once

#include "gkmcalc/equivariant_class.hpp"

#include <string>
#include <vector>

namespace gkmcalc {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail; // first failure, if any
};

/// Suite names accepted by run_suites ("all" runs every one).
const std::vector<std::string>& suite_names();

/// Runs the invariant suites on one flag variety. Throws std::invalid_argument
/// for an unknown suite name.
std::vector<CheckResult> run_suites(const std::shared_ptr<const FlagVariety>& flag,
                                    const std::string& suite);

} // namespace gkmcalc
