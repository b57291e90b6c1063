#pragma once

#include <cstdint>
#include <map>

#include "rankedtree/increasing_tree.hpp"
#include "rankedtree/philox.hpp"

namespace rankedtree {

// Total work cap (leaves times replicates, doubled for pair runs) so a typo
// in --samples fails fast instead of grinding for hours.
inline constexpr std::int64_t kSampleWorkBudget = 2'000'000'000;

struct SimConfig {
  int n = 2;                  // leaves per sampled tree
  std::int64_t samples = 1;   // replicates (pairs for identity runs)
  std::uint64_t seed = 0;
  int workers = 1;

  bool operator==(const SimConfig&) const = default;
};

// One struct serves both run kinds: statistics runs leave the identity
// fields zeroed, identity runs additionally tally the first tree of every
// pair into the histograms so histogram totals always equal `samples`.
struct EmpiricalSummary {
  SimConfig config;
  std::map<int, std::int64_t> cherry_histogram;
  std::map<int, std::int64_t> pitchfork_histogram;
  double cherry_mean = 0.0;
  double cherry_variance = 0.0;
  double cherry_se = 0.0;
  double pitchfork_mean = 0.0;
  double pitchfork_variance = 0.0;
  double pitchfork_se = 0.0;
  std::int64_t identity_trials = 0;
  std::int64_t identity_matches = 0;
  double identity_fraction = 0.0;
  double identity_se = 0.0;

  bool operator==(const EmpiricalSummary&) const = default;
};

// Draws one ranked tree of the coalescent process: starting from n lineages,
// repeatedly merges a uniformly random unordered pair until one remains,
// then converts the merge sequence to its increasing tree.
IncreasingTree sample_ranked_tree(int n, PhiloxEngine& engine);

// Monte Carlo estimate of the cherry/pitchfork distribution at `config.n`
// leaves. Replicates are split across `workers` keyed substreams (seed,
// worker index) and merged in worker order, so the result is a pure function
// of the config. The plain version runs workers concurrently when OpenMP is
// enabled; the `_serial` version is the single-threaded reference and
// returns an identical summary.
EmpiricalSummary estimate_statistics(const SimConfig& config);
EmpiricalSummary estimate_statistics_serial(const SimConfig& config);

// Monte Carlo estimate of the probability that two independent ranked trees
// of size n are identical; `config.samples` counts independent pairs.
EmpiricalSummary estimate_identity_probability(const SimConfig& config);
EmpiricalSummary estimate_identity_probability_serial(const SimConfig& config);

}  // namespace rankedtree
