#include "rankedtree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "rankedtree/big_rational.hpp"
#include "rankedtree/closed_forms.hpp"
#include "rankedtree/count_table.hpp"
#include "rankedtree/distributions.hpp"
#include "rankedtree/enumeration.hpp"
#include "rankedtree/simulate.hpp"

namespace rankedtree {

namespace {

// Collects per-check failures; a check passes iff nothing was reported.
class FailureLog {
 public:
  template <typename... Parts>
  void add(Parts&&... parts) {
    ++failures_;
    if (failures_ <= kMaxReported) {
      if (failures_ > 1) {
        stream_ << "; ";
      }
      (stream_ << ... << parts);
    }
  }

  CheckResult finish(std::string name) const {
    std::string detail = stream_.str();
    if (failures_ > kMaxReported) {
      detail += "; ... (" + std::to_string(failures_) + " failures total)";
    }
    return CheckResult{std::move(name), failures_ == 0, std::move(detail)};
  }

 private:
  static constexpr int kMaxReported = 4;
  int failures_ = 0;
  std::ostringstream stream_;
};

using Results = std::vector<CheckResult>;

// |R_1|..|R_13|: the zigzag numbers shifted by one.
const std::vector<BigInt>& reference_tree_counts() {
  static const std::vector<BigInt> values{1,     1,      1,      2,    5,
                                          16,    61,     272,    1385, 7936,
                                          50521, 353792, 2702765};
  return values;
}

void check_euler_regression(Results& results) {
  FailureLog log;
  const std::vector<BigInt> computed = euler_numbers(8);
  const std::vector<BigInt> expected{1, 1, 1, 2, 5, 16, 61, 272};
  if (computed != expected) {
    log.add("euler_numbers(8) mismatch");
  }
  results.push_back(log.finish("euler-regression"));
}

void check_euler_zigzag_oracle(Results& results) {
  FailureLog log;
  const int k = 13;
  const std::vector<BigInt> from_tables = euler_numbers(k);
  const std::vector<BigInt> from_zigzag = euler_numbers_zigzag(k);
  const std::vector<BigInt>& reference = reference_tree_counts();
  for (int i = 0; i < k; ++i) {
    const auto index = static_cast<std::size_t>(i);
    if (from_tables[index] != from_zigzag[index]) {
      log.add("table/zigzag disagree at n=", i + 1);
    }
    if (from_tables[index] != reference[index]) {
      log.add("count at n=", i + 1, " is ", from_tables[index].str());
    }
  }
  results.push_back(log.finish("euler-zigzag-oracle"));
}

void check_count_table_regression(Results& results) {
  FailureLog log;
  using Entries = std::map<std::pair<int, int>, BigInt>;
  const std::vector<Entries> expected{
      {{{1, 0}, 1}},                                          // m = 1
      {{{1, 1}, 1}},                                          // m = 2
      {{{1, 1}, 1}, {{2, 0}, 1}},                             // m = 3
      {{{1, 1}, 1}, {{2, 0}, 1}, {{2, 1}, 3}},                // m = 4
      {{{1, 1}, 1},
       {{2, 0}, 1},
       {{2, 1}, 7},
       {{2, 2}, 3},
       {{3, 0}, 4}},                                          // m = 5
  };
  JointCountTable table = JointCountTable::initial();
  for (int m = 1; m <= 5; ++m) {
    if (table.nonzero_entries() != expected[static_cast<std::size_t>(m - 1)]) {
      log.add("table mismatch at m=", m);
    }
    if (m < 5) {
      table = extend_counts(table);
    }
  }
  results.push_back(log.finish("count-table-regression"));
}

void check_identity_regression(Results& results) {
  FailureLog log;
  const std::vector<BigRational> expected{
      1, 1, BigRational{5, 9}, BigRational{2, 9}, BigRational{16, 225}};
  for (int n = 2; n <= 6; ++n) {
    const BigRational p = identity_probability(n);
    if (p != expected[static_cast<std::size_t>(n - 2)]) {
      log.add("p_", n, " = ", to_fraction_string(p));
    }
  }
  results.push_back(log.finish("identity-regression"));
}

void check_f_series_regression(Results& results) {
  FailureLog log;
  const auto coefficients = f_series_coefficients(8);
  const std::vector<std::map<int, BigRational>> expected{
      {{1, 1}},                                                    // n = 2
      {{1, 1}},                                                    // n = 3
      {{1, BigRational{2, 3}}, {2, BigRational{1, 3}}},            // n = 4
      {{1, BigRational{1, 3}}, {2, BigRational{2, 3}}},            // n = 5
      {{1, BigRational{2, 15}},
       {2, BigRational{11, 15}},
       {3, BigRational{2, 15}}},                                   // n = 6
      {{1, BigRational{2, 45}},
       {2, BigRational{26, 45}},
       {3, BigRational{17, 45}}},                                  // n = 7
      {{1, BigRational{4, 315}},
       {2, BigRational{114, 315}},
       {3, BigRational{180, 315}},
       {4, BigRational{17, 315}}},                                 // n = 8
  };
  for (int n = 2; n <= 8; ++n) {
    const std::vector<BigRational>& row =
        coefficients[static_cast<std::size_t>(n)];
    const auto& want = expected[static_cast<std::size_t>(n - 2)];
    for (std::size_t o = 0; o < row.size(); ++o) {
      const auto it = want.find(static_cast<int>(o));
      const BigRational target = it == want.end() ? BigRational{0} : it->second;
      if (row[o] != target) {
        log.add("coefficient of x^", o, " z^", n, " is ",
                to_fraction_string(row[o]));
      }
    }
  }
  results.push_back(log.finish("f-series-regression"));
}

void check_y_taylor_quarter(Results& results) {
  FailureLog log;
  // At x = 1/4 the cherry polynomial collapses: coefficients of z^m/m!
  // become 1/4, 1/8, 5/96, 1/48, 1/120 for m = 1..5.
  const std::vector<BigRational> expected{
      BigRational{1, 4}, BigRational{1, 8}, BigRational{5, 96},
      BigRational{1, 48}, BigRational{1, 120}};
  const BigRational x{1, 4};
  JointCountTable table = JointCountTable::initial();
  for (int m = 1; m <= 5; ++m) {
    if (table.size() != m) {
      table = extend_counts(table);
    }
    const std::vector<BigInt> marginal = table.cherry_marginal();
    BigRational value = 0;
    BigRational x_power = 1;
    for (int o = 1; o <= table.max_cherries(); ++o) {
      x_power *= x;
      value += x_power * marginal[static_cast<std::size_t>(o)];
    }
    value /= factorial(m);
    if (value != expected[static_cast<std::size_t>(m - 1)]) {
      log.add("z^", m, " coefficient at x=1/4 is ", to_fraction_string(value));
    }
  }
  results.push_back(log.finish("y-taylor-quarter"));
}

void check_series_vs_closed_form(Results& results) {
  FailureLog log;
  constexpr double kTolerance = 1e-12;
  constexpr int kOrder = 40;
  const std::pair<double, double> f_points[]{{0.5, 0.1}, {0.25, 0.2}};
  for (const auto& [x, z] : f_points) {
    const ClosedFormValues values = evaluate_closed_forms(x, z);
    if (!values.f) {
      log.add("F undefined at (", x, ",", z, ")");
      continue;
    }
    const double series = f_series_value(x, z, kOrder);
    if (std::abs(series - *values.f) > kTolerance) {
      log.add("F gap ", std::abs(series - *values.f), " at (", x, ",", z, ")");
    }
  }
  const std::pair<double, double> y_points[]{{0.25, 0.2}, {0.4, 0.5}};
  for (const auto& [x, z] : y_points) {
    const ClosedFormValues values = evaluate_closed_forms(x, z);
    if (!values.y) {
      log.add("Y undefined at (", x, ",", z, ")");
      continue;
    }
    const double series = y_series_value(x, z, kOrder);
    if (std::abs(series - *values.y) > kTolerance) {
      log.add("Y gap ", std::abs(series - *values.y), " at (", x, ",", z, ")");
    }
  }
  // F is defined on x in [1/2, 1) where Y is not; both must agree with that.
  const ClosedFormValues split = evaluate_closed_forms(0.75, 0.3);
  if (split.y || !split.f) {
    log.add("domain split wrong at x=0.75");
  }
  results.push_back(log.finish("series-vs-closed-form"));
}

// One incremental sweep of the counting recurrence up to the closed-form
// bound, checking support, normalization, marginals, conditionals and the
// moment identities from the same tables.
void run_closed_form_sweep(const VerifyOptions& options, Results& results) {
  FailureLog support;
  FailureLog normalization;
  FailureLog marginals;
  FailureLog conditionals;
  FailureLog cherry_mean_log;
  FailureLog cherry_variance_log;
  FailureLog pitchfork_mean_log;
  FailureLog recursion_log;

  const int max_m = std::max(options.max_closed_form_size, 5);
  const int structural_cap = 60;  // quadratic-cost checks stop here
  JointCountTable table = JointCountTable::initial();
  for (int m = 1; m <= max_m; ++m) {
    if (table.size() != m) {
      table = extend_counts(table);
    }

    for (const auto& [state, count] : table.nonzero_entries()) {
      const auto [o, r] = state;
      if (o < 1 || o > (m + 1) / 2 || r < 0 || r > o || r > m - 2 * o + 1) {
        support.add("state (", o, ",", r, ") outside support at m=", m);
      }
      (void)count;
    }

    const bool structural = m <= structural_cap || m == max_m;
    if (structural) {
      const JointDistribution joint = joint_distribution(table);
      const CherryDistribution cherries = cherry_distribution(table);
      const PitchforkDistribution pitchforks = pitchfork_distribution(table);
      if (joint.sum() != 1 || cherries.sum() != 1 || pitchforks.sum() != 1) {
        normalization.add("total probability not 1 at m=", m);
      }
      for (const auto& [o, p] : cherries.entries()) {
        BigRational row = 0;
        for (int r = 0; r <= table.max_pitchforks(o); ++r) {
          row += joint.probability({o, r});
        }
        if (row != p) {
          marginals.add("cherry marginal mismatch at m=", m, " o=", o);
        }
      }
      for (const auto& [r, p] : pitchforks.entries()) {
        BigRational column = 0;
        for (int o = table.min_cherries(); o <= table.max_cherries(); ++o) {
          column += joint.probability({o, r});
        }
        if (column != p) {
          marginals.add("pitchfork marginal mismatch at m=", m, " r=", r);
        }
      }
      for (const auto& [o, p_o] : cherries.entries()) {
        const PitchforkDistribution conditional =
            conditional_pitchfork_distribution(table, o);
        for (int r = 0; r <= table.max_pitchforks(o); ++r) {
          if (p_o * conditional.probability(r) != joint.probability({o, r})) {
            conditionals.add("chain rule fails at m=", m, " (", o, ",", r,
                             ")");
          }
        }
      }
    }

    // Moment identities against the closed forms. The cherry count at m
    // corresponds to n = m + 1 leaves.
    const CherryDistribution cherries = cherry_distribution(table);
    const int n = m + 1;
    if (n >= 3 && mean(cherries) != BigRational{n, 3}) {
      cherry_mean_log.add("E[o] != n/3 at n=", n);
    }
    if (n >= 7 && variance(cherries) != BigRational{2 * n, 45}) {
      cherry_variance_log.add("Var[o] != 2n/45 at n=", n);
    }
    const PitchforkDistribution pitchforks = pitchfork_distribution(table);
    const BigRational pitchfork_mean = mean(pitchforks);
    if (m >= 3 && pitchfork_mean != BigRational{m + 1, 6}) {
      pitchfork_mean_log.add("E[r] != (m+1)/6 at m=", m);
    }
    if (expected_pitchforks_by_recursion(m) != pitchfork_mean) {
      recursion_log.add("recursion disagrees with distribution at m=", m);
    }
  }

  results.push_back(support.finish("support-bounds"));
  results.push_back(normalization.finish("normalization"));
  results.push_back(marginals.finish("marginal-consistency"));
  results.push_back(conditionals.finish("conditional-reconstruction"));
  results.push_back(cherry_mean_log.finish("cherry-mean-identity"));
  results.push_back(cherry_variance_log.finish("cherry-variance-identity"));
  results.push_back(pitchfork_mean_log.finish("pitchfork-mean-identity"));
  results.push_back(recursion_log.finish("pitchfork-mean-recursion"));
}

void run_enumeration_checks(const VerifyOptions& options, Results& results) {
  FailureLog counts_log;
  FailureLog histogram_log;
  FailureLog probability_log;
  FailureLog invariant_log;
  FailureLog identity_log;

  const int max_m =
      std::clamp(options.max_enumeration_size, 1, kMaxEnumerationSize);
  const std::vector<BigInt>& reference = reference_tree_counts();
  JointCountTable table = JointCountTable::initial();
  for (int m = 1; m <= max_m; ++m) {
    if (table.size() != m) {
      table = extend_counts(table);
    }
    std::map<std::pair<int, int>, BigInt> histogram;
    std::map<CanonicalCode, int> codes;
    BigInt tree_count = 0;
    BigRational probability_total = 0;
    BigRational probability_squares = 0;
    for_each_increasing_tree(m, [&](const IncreasingTree& tree) {
      ++tree_count;
      const OutdegreeProfile profile = outdegree_profile(tree);
      const int o = count_cherries(tree);
      const int r = count_pitchforks(tree);
      histogram[{o, r}] += 1;
      if (profile.leaf_nodes != o ||
          profile.leaf_nodes != profile.binary_nodes + 1 ||
          profile.leaf_nodes + profile.unary_nodes + profile.binary_nodes !=
              m ||
          r > std::min(o, m - 2 * o + 1)) {
        invariant_log.add("profile violation at m=", m);
      }
      const BigRational p = coalescent_probability(tree);
      if (p != BigRational{pow2(m - o), factorial(m)}) {
        invariant_log.add("probability formula violation at m=", m);
      }
      probability_total += p;
      probability_squares += p * p;
      if (m <= 8) {
        codes[canonical_code(tree)] += 1;
      }
    });
    // Size-m trees are counted by |R_{m+1}|.
    if (m < static_cast<int>(reference.size()) &&
        tree_count != reference[static_cast<std::size_t>(m)]) {
      counts_log.add("enumerated ", tree_count.str(), " trees at m=", m);
    }
    if (histogram != table.nonzero_entries()) {
      histogram_log.add("histogram differs from recurrence at m=", m);
    }
    if (probability_total != 1) {
      probability_log.add("probabilities sum to ",
                          to_fraction_string(probability_total), " at m=", m);
    }
    if (m <= 8) {
      if (static_cast<BigInt>(codes.size()) != tree_count) {
        invariant_log.add("canonical codes collide at m=", m);
      }
    }
    if (probability_squares != identity_probability(m + 1)) {
      identity_log.add("sum of squared probabilities differs at n=", m + 1);
    }
  }

  results.push_back(counts_log.finish("enumeration-count"));
  results.push_back(histogram_log.finish("enumeration-vs-recurrence"));
  results.push_back(probability_log.finish("enumeration-probability-total"));
  results.push_back(invariant_log.finish("tree-invariants"));
  results.push_back(identity_log.finish("identity-enumeration-oracle"));
}

// Exhaustively expands every sequence of pair choices the sampler could
// make for small n, propagating exact probabilities (1 / C(k,2) per step).
// This validates the merge bookkeeping without any RNG involved.
void expand_merge_choices(int n, std::vector<std::int32_t>& active,
                          std::vector<MergeChoice>& merges,
                          const BigRational& probability,
                          std::map<CanonicalCode, BigRational>& accumulated) {
  const int k = static_cast<int>(active.size());
  if (k == 1) {
    const IncreasingTree tree = tree_from_merge_sequence(n, merges);
    accumulated[canonical_code(tree)] += probability;
    return;
  }
  const BigRational step = probability / (k * (k - 1) / 2);
  const auto new_id =
      static_cast<std::int32_t>(n + static_cast<int>(merges.size()) + 1);
  for (int j = 1; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      const std::int32_t first = active[static_cast<std::size_t>(i)];
      const std::int32_t second = active[static_cast<std::size_t>(j)];
      const std::int32_t last = active.back();
      merges.push_back({first, second});
      active[static_cast<std::size_t>(i)] = new_id;
      active[static_cast<std::size_t>(j)] = last;
      active.pop_back();

      expand_merge_choices(n, active, merges, step, accumulated);

      active.push_back(last);
      active[static_cast<std::size_t>(j)] = second;
      active[static_cast<std::size_t>(i)] = first;
      merges.pop_back();
    }
  }
}

void check_merge_sequence_oracle(Results& results) {
  FailureLog log;
  for (int n = 2; n <= 5; ++n) {
    std::map<CanonicalCode, BigRational> accumulated;
    std::vector<std::int32_t> active(static_cast<std::size_t>(n));
    std::iota(active.begin(), active.end(), 1);
    std::vector<MergeChoice> merges;
    expand_merge_choices(n, active, merges, 1, accumulated);

    BigInt trees = 0;
    bool all_match = true;
    for_each_increasing_tree(n - 1, [&](const IncreasingTree& tree) {
      ++trees;
      const auto it = accumulated.find(canonical_code(tree));
      if (it == accumulated.end() ||
          it->second != coalescent_probability(tree)) {
        all_match = false;
      }
    });
    if (!all_match) {
      log.add("merge-choice mass differs from coalescent weight at n=", n);
    }
    if (static_cast<BigInt>(accumulated.size()) != trees) {
      log.add("merge choices reach ", accumulated.size(), " trees at n=", n);
    }
  }
  results.push_back(log.finish("merge-sequence-oracle"));
}

void check_sixteen_tree_census(Results& results) {
  FailureLog log;
  // Size 5: 16 trees, 11 of them with two cherries (probability 11/15),
  // splitting 1/7/3 over r = 0/1/2.
  BigInt total = 0;
  std::map<int, BigInt> by_cherries;
  std::map<int, BigInt> split;
  for_each_increasing_tree(5, [&](const IncreasingTree& tree) {
    ++total;
    const int o = count_cherries(tree);
    by_cherries[o] += 1;
    if (o == 2) {
      split[count_pitchforks(tree)] += 1;
    }
  });
  if (total != 16) {
    log.add("size-5 enumeration has ", total.str(), " trees");
  }
  if (by_cherries[2] != 11) {
    log.add("two-cherry trees: ", by_cherries[2].str());
  }
  if (split != std::map<int, BigInt>{{0, 1}, {1, 7}, {2, 3}}) {
    log.add("two-cherry pitchfork split differs");
  }
  if (cherry_distribution(6).probability(2) != BigRational{11, 15}) {
    log.add("P(o=2) at n=6 is not 11/15");
  }
  results.push_back(log.finish("sixteen-tree-census"));
}

void check_simulation_determinism(Results& results) {
  FailureLog log;
  const SimConfig stats_config{.n = 10, .samples = 2000, .seed = 7,
                               .workers = 3};
  const EmpiricalSummary parallel = estimate_statistics(stats_config);
  const EmpiricalSummary serial = estimate_statistics_serial(stats_config);
  const EmpiricalSummary repeat = estimate_statistics(stats_config);
  if (!(parallel == serial)) {
    log.add("parallel and serial statistics differ");
  }
  if (!(parallel == repeat)) {
    log.add("repeated statistics run differs");
  }
  std::int64_t total = 0;
  for (const auto& [outcome, count] : parallel.cherry_histogram) {
    (void)outcome;
    total += count;
  }
  if (total != stats_config.samples) {
    log.add("histogram total ", total, " != samples");
  }

  const SimConfig identity_config{.n = 5, .samples = 1500, .seed = 11,
                                  .workers = 4};
  const EmpiricalSummary pairs = estimate_identity_probability(identity_config);
  const EmpiricalSummary pairs_serial =
      estimate_identity_probability_serial(identity_config);
  if (!(pairs == pairs_serial)) {
    log.add("parallel and serial identity runs differ");
  }
  if (pairs.identity_trials != identity_config.samples ||
      pairs.identity_matches < 0 ||
      pairs.identity_matches > pairs.identity_trials) {
    log.add("identity tallies out of range");
  }
  if (!(pairs.identity_se >= 0.0) || !std::isfinite(pairs.identity_se) ||
      !std::isfinite(pairs.cherry_se)) {
    log.add("standard errors not finite/nonnegative");
  }
  results.push_back(log.finish("simulation-determinism"));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Results results;
  check_euler_regression(results);
  check_euler_zigzag_oracle(results);
  check_count_table_regression(results);
  check_identity_regression(results);
  check_f_series_regression(results);
  check_y_taylor_quarter(results);
  check_series_vs_closed_form(results);
  run_closed_form_sweep(options, results);
  run_enumeration_checks(options, results);
  check_merge_sequence_oracle(results);
  check_sixteen_tree_census(results);
  check_simulation_determinism(results);
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& result : results) {
    if (!result.passed) {
      return false;
    }
  }
  return true;
}

}  // namespace rankedtree
