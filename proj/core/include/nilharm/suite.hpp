#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilharm/group.hpp"
#include "nilharm/laplacian.hpp"

namespace nilharm {

struct CheckResult {
  std::string name;
  bool pass = true;
  /// Counts on success, a witness on failure.
  std::string detail;
};

struct SuiteOptions {
  int k_max = 4;
  /// Radius for the harmonic oracle.
  int radius = 4;
  std::size_t tuple_budget = 2000;
};

/// Runs the group, polynomial, Laplacian and oracle invariants for one
/// (schema, measure) pair. Never throws for a failed identity: every
/// exception from a check is caught and reported as that check's failure.
std::vector<CheckResult> run_invariant_suite(const GroupSchema& schema, const Measure& mu,
                                             const SuiteOptions& options);

}  // namespace nilharm
