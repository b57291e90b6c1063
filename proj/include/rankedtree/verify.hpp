#pragma once

#include <string>
#include <vector>

namespace rankedtree {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success, diagnostic on failure
};

struct VerifyOptions {
  // Sizes up to which brute-force enumeration is compared against the
  // counting recurrence (exponential cost).
  int max_enumeration_size = 10;
  // Sizes up to which the closed-form moment identities are checked
  // (polynomial cost).
  int max_closed_form_size = 200;
};

// Runs the full invariant suite: oracle equivalence between the enumerator,
// the counting recurrence and the sampler's merge logic; regression values;
// normalization and marginal consistency; moment identities; closed-form
// numeric agreement; determinism of the simulation paths.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rankedtree
