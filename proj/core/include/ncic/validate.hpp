// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncic/rng.hpp"

namespace ncic {

// One executed check. value is the measured quantity (usually a worst-case
// deviation over a grid) and tolerance the pinned budget it is judged
// against; pass is authoritative when the two compare near the edge.
struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
};

struct CheckOptions {
  // full additionally runs the million-sample rate-table reproduction and
  // widens the statistical sample sizes.
  bool full = false;
  std::uint64_t seed = kDefaultSeed;
};

// The release gate: closed-form spot values, regime continuity, scheme
// dominance, the elimination oracle, prelog slopes, the expectation
// bracket, and finite-SNR convergence. Check names carry a cN- prefix so
// reports can group them by criterion. The rate-table reproduction (c1-*)
// runs only with options.full.
std::vector<CheckResult> acceptance_checks(const CheckOptions& options);

// Module-level invariants: estimator identities, sampler determinism,
// elimination hand examples, special-function spot values, Monte-Carlo
// consistency, and serialization round-trips.
std::vector<CheckResult> invariant_checks(const CheckOptions& options);

// "PASS name value tolerance" with scientific-notation numbers.
std::string format_check_line(const CheckResult& result);

}  // namespace ncic
