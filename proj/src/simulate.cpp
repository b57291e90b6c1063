#include "rankedtree/simulate.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankedtree/enumeration.hpp"

namespace rankedtree {

namespace {

// Decodes u in [0, k(k-1)/2) to the unordered pair (i, j), 0 <= i < j,
// enumerated as u = j(j-1)/2 + i. The float estimate of j is corrected by
// integer comparisons, so the decode is exact for any u.
std::pair<int, int> decode_pair(std::uint64_t u) {
  auto j = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(u))) / 2.0);
  while (j > 1 && j * (j - 1) / 2 > u) {
    --j;
  }
  while ((j + 1) * j / 2 <= u) {
    ++j;
  }
  return {static_cast<int>(u - j * (j - 1) / 2), static_cast<int>(j)};
}

void validate_config(const SimConfig& config, int trees_per_replicate) {
  if (config.n < 2) {
    throw std::out_of_range("simulate: need at least 2 leaves");
  }
  if (config.n > 1'000'000'000) {
    throw std::out_of_range("simulate: leaf labels must fit 32 bits");
  }
  if (config.samples < 1) {
    throw std::out_of_range("simulate: need at least 1 replicate");
  }
  if (config.workers < 1) {
    throw std::out_of_range("simulate: need at least 1 worker");
  }
  const auto work = static_cast<unsigned __int128>(config.n) *
                    static_cast<unsigned __int128>(config.samples) *
                    static_cast<unsigned __int128>(trees_per_replicate);
  if (work > static_cast<unsigned __int128>(kSampleWorkBudget)) {
    throw std::out_of_range("simulate: n * samples exceeds the work budget");
  }
}

struct WorkerTally {
  std::map<int, std::int64_t> cherry_histogram;
  std::map<int, std::int64_t> pitchfork_histogram;
  std::int64_t cherry_sum = 0;
  std::int64_t cherry_sum_squares = 0;
  std::int64_t pitchfork_sum = 0;
  std::int64_t pitchfork_sum_squares = 0;
  std::int64_t matches = 0;
};

// Replicates are dealt out as one contiguous chunk per worker; workers with
// index < samples % workers take one extra.
std::int64_t chunk_size(std::int64_t samples, int workers, int worker) {
  return samples / workers + (worker < samples % workers ? 1 : 0);
}

void tally_tree(const IncreasingTree& tree, WorkerTally& tally) {
  const std::int64_t cherries = count_cherries(tree);
  const std::int64_t pitchforks = count_pitchforks(tree);
  tally.cherry_histogram[static_cast<int>(cherries)] += 1;
  tally.pitchfork_histogram[static_cast<int>(pitchforks)] += 1;
  tally.cherry_sum += cherries;
  tally.cherry_sum_squares += cherries * cherries;
  tally.pitchfork_sum += pitchforks;
  tally.pitchfork_sum_squares += pitchforks * pitchforks;
}

WorkerTally run_worker(const SimConfig& config, int worker,
                       bool identity_pairs) {
  WorkerTally tally;
  PhiloxEngine engine(config.seed, static_cast<std::uint64_t>(worker));
  const std::int64_t replicates =
      chunk_size(config.samples, config.workers, worker);
  for (std::int64_t replicate = 0; replicate < replicates; ++replicate) {
    const IncreasingTree first = sample_ranked_tree(config.n, engine);
    tally_tree(first, tally);
    if (identity_pairs) {
      const IncreasingTree second = sample_ranked_tree(config.n, engine);
      if (canonical_code(first) == canonical_code(second)) {
        tally.matches += 1;
      }
    }
  }
  return tally;
}

void accumulate_moments(std::int64_t sum, std::int64_t sum_squares,
                        std::int64_t samples, double& mean, double& variance,
                        double& standard_error) {
  const auto count = static_cast<double>(samples);
  mean = static_cast<double>(sum) / count;
  if (samples < 2) {
    variance = 0.0;
    standard_error = 0.0;
    return;
  }
  const double corrected =
      static_cast<double>(sum_squares) -
      static_cast<double>(sum) / count * static_cast<double>(sum);
  variance = std::max(corrected, 0.0) / (count - 1.0);
  standard_error = std::sqrt(variance / count);
}

EmpiricalSummary run_simulation(const SimConfig& config, bool identity_pairs,
                                bool parallel) {
  validate_config(config, identity_pairs ? 2 : 1);
  std::vector<WorkerTally> tallies(static_cast<std::size_t>(config.workers));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int worker = 0; worker < config.workers; ++worker) {
      tallies[static_cast<std::size_t>(worker)] =
          run_worker(config, worker, identity_pairs);
    }
  } else {
    for (int worker = 0; worker < config.workers; ++worker) {
      tallies[static_cast<std::size_t>(worker)] =
          run_worker(config, worker, identity_pairs);
    }
  }

  EmpiricalSummary summary;
  summary.config = config;
  std::int64_t cherry_sum = 0;
  std::int64_t cherry_sum_squares = 0;
  std::int64_t pitchfork_sum = 0;
  std::int64_t pitchfork_sum_squares = 0;
  for (const WorkerTally& tally : tallies) {
    for (const auto& [outcome, count] : tally.cherry_histogram) {
      summary.cherry_histogram[outcome] += count;
    }
    for (const auto& [outcome, count] : tally.pitchfork_histogram) {
      summary.pitchfork_histogram[outcome] += count;
    }
    cherry_sum += tally.cherry_sum;
    cherry_sum_squares += tally.cherry_sum_squares;
    pitchfork_sum += tally.pitchfork_sum;
    pitchfork_sum_squares += tally.pitchfork_sum_squares;
    summary.identity_matches += tally.matches;
  }
  accumulate_moments(cherry_sum, cherry_sum_squares, config.samples,
                     summary.cherry_mean, summary.cherry_variance,
                     summary.cherry_se);
  accumulate_moments(pitchfork_sum, pitchfork_sum_squares, config.samples,
                     summary.pitchfork_mean, summary.pitchfork_variance,
                     summary.pitchfork_se);
  if (identity_pairs) {
    summary.identity_trials = config.samples;
    const auto trials = static_cast<double>(summary.identity_trials);
    const double fraction =
        static_cast<double>(summary.identity_matches) / trials;
    summary.identity_fraction = fraction;
    summary.identity_se = std::sqrt(fraction * (1.0 - fraction) / trials);
  } else {
    summary.identity_matches = 0;
  }
  return summary;
}

}  // namespace

IncreasingTree sample_ranked_tree(int n, PhiloxEngine& engine) {
  if (n < 2) {
    throw std::out_of_range("sample_ranked_tree: need at least 2 leaves");
  }
  std::vector<std::int32_t> active(static_cast<std::size_t>(n));
  std::iota(active.begin(), active.end(), 1);
  std::vector<MergeChoice> merges;
  merges.reserve(static_cast<std::size_t>(n) - 1);
  for (int k = n; k >= 2; --k) {
    const auto pairs = static_cast<std::uint64_t>(k) *
                       static_cast<std::uint64_t>(k - 1) / 2;
    const auto [i, j] = decode_pair(uniform_below(engine, pairs));
    merges.push_back({active[static_cast<std::size_t>(i)],
                      active[static_cast<std::size_t>(j)]});
    active[static_cast<std::size_t>(i)] =
        static_cast<std::int32_t>(n + (n - k + 1));
    active[static_cast<std::size_t>(j)] = active.back();
    active.pop_back();
  }
  return tree_from_merge_sequence(n, merges);
}

EmpiricalSummary estimate_statistics(const SimConfig& config) {
  return run_simulation(config, /*identity_pairs=*/false, /*parallel=*/true);
}

EmpiricalSummary estimate_statistics_serial(const SimConfig& config) {
  return run_simulation(config, /*identity_pairs=*/false, /*parallel=*/false);
}

EmpiricalSummary estimate_identity_probability(const SimConfig& config) {
  return run_simulation(config, /*identity_pairs=*/true, /*parallel=*/true);
}

EmpiricalSummary estimate_identity_probability_serial(
    const SimConfig& config) {
  return run_simulation(config, /*identity_pairs=*/true, /*parallel=*/false);
}

}  // namespace rankedtree
