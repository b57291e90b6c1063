#include "rankedtree/distributions.hpp"

#include <utility>

namespace rankedtree {

namespace {

BigRational state_probability(const JointCountTable& table, int o,
                              const BigInt& count) {
  const int m = table.size();
  return BigRational{count * pow2(m - o), factorial(m)};
}

}  // namespace

JointDistribution joint_distribution(const JointCountTable& table) {
  JointDistribution::Map entries;
  table.for_each_state([&](int o, int r, const BigInt& count) {
    entries.emplace(JointOutcome{o, r}, state_probability(table, o, count));
  });
  return JointDistribution{std::move(entries)};
}

JointDistribution joint_distribution(int m, int size_cap) {
  return joint_distribution(joint_count_table(m, size_cap));
}

CherryDistribution cherry_distribution(const JointCountTable& table) {
  CherryDistribution::Map entries;
  const std::vector<BigInt> marginal = table.cherry_marginal();
  for (int o = table.min_cherries(); o <= table.max_cherries(); ++o) {
    entries.emplace(o, state_probability(table, o, marginal[o]));
  }
  return CherryDistribution{std::move(entries)};
}

CherryDistribution cherry_distribution(int n, int size_cap) {
  if (n < 2) {
    throw std::out_of_range("cherry_distribution: need at least 2 leaves");
  }
  return cherry_distribution(joint_count_table(n - 1, size_cap));
}

PitchforkDistribution pitchfork_distribution(const JointCountTable& table) {
  const int m = table.size();
  // The coalescent weight depends on o, so accumulate weighted numerators
  // per pitchfork count before dividing by m!.
  std::vector<BigInt> weighted(static_cast<std::size_t>(m / 2) + 2, 0);
  table.for_each_state([&](int o, int r, const BigInt& count) {
    weighted[static_cast<std::size_t>(r)] += count * pow2(m - o);
  });
  const BigInt denom = factorial(m);
  PitchforkDistribution::Map entries;
  for (std::size_t r = 0; r < weighted.size(); ++r) {
    if (weighted[r] != 0) {
      entries.emplace(static_cast<int>(r), BigRational{weighted[r], denom});
    }
  }
  return PitchforkDistribution{std::move(entries)};
}

PitchforkDistribution pitchfork_distribution(int m, int size_cap) {
  return pitchfork_distribution(joint_count_table(m, size_cap));
}

PitchforkDistribution conditional_pitchfork_distribution(
    const JointCountTable& table, int cherries) {
  BigInt row_total = 0;
  for (int r = 0; r <= table.max_pitchforks(cherries); ++r) {
    row_total += table.count(cherries, r);
  }
  if (row_total == 0) {
    throw std::domain_error(
        "conditional_pitchfork_distribution: no tree has that many cherries");
  }
  PitchforkDistribution::Map entries;
  for (int r = 0; r <= table.max_pitchforks(cherries); ++r) {
    entries.emplace(r, BigRational{table.count(cherries, r), row_total});
  }
  return PitchforkDistribution{std::move(entries)};
}

PitchforkDistribution conditional_pitchfork_distribution(int m, int cherries,
                                                         int size_cap) {
  return conditional_pitchfork_distribution(joint_count_table(m, size_cap),
                                            cherries);
}

std::map<int, BigRational> conditional_pitchfork_means(
    const JointCountTable& table) {
  std::map<int, BigRational> means;
  for (int o = table.min_cherries(); o <= table.max_cherries(); ++o) {
    BigInt row_total = 0;
    BigInt weighted = 0;
    for (int r = 0; r <= table.max_pitchforks(o); ++r) {
      row_total += table.count(o, r);
      weighted += table.count(o, r) * r;
    }
    if (row_total != 0) {
      means.emplace(o, BigRational{weighted, row_total});
    }
  }
  return means;
}

BigRational identity_probability(int n, int size_cap) {
  if (n < 2) {
    throw std::out_of_range("identity_probability: need at least 2 leaves");
  }
  const int m = n - 1;
  const JointCountTable table = joint_count_table(m, size_cap);
  const std::vector<BigInt> marginal = table.cherry_marginal();
  // sum_o C_m(o) * (2^(m-o))^2, then divide by (m!)^2.
  BigInt numerator = 0;
  for (int o = table.min_cherries(); o <= table.max_cherries(); ++o) {
    numerator += marginal[o] * pow2(2 * (m - o));
  }
  const BigInt m_factorial = factorial(m);
  return BigRational{numerator, m_factorial * m_factorial};
}

std::vector<BigInt> euler_numbers(int k_max) {
  if (k_max < 1) {
    throw std::out_of_range("euler_numbers: need k >= 1");
  }
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(k_max));
  counts.push_back(1);  // |R_1|: the single-leaf tree.
  JointCountTable table = JointCountTable::initial();
  for (int n = 2; n <= k_max; ++n) {
    counts.push_back(table.total());
    if (n < k_max) {
      table = extend_counts(table);
    }
  }
  return counts;
}

std::vector<BigInt> euler_numbers_zigzag(int k_max) {
  if (k_max < 1) {
    throw std::out_of_range("euler_numbers_zigzag: need k >= 1");
  }
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(k_max));
  std::vector<BigInt> row{1};  // E(0, 0)
  for (int n = 1; n <= k_max; ++n) {
    // |R_n| is the zigzag number for n-1 objects, the last entry of the
    // previous row.
    counts.push_back(row.back());
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
      next[static_cast<std::size_t>(k)] =
          next[static_cast<std::size_t>(k - 1)] +
          row[static_cast<std::size_t>(n - k)];
    }
    row = std::move(next);
  }
  return counts;
}

BigRational mean(const DistributionTable<int>& distribution) {
  BigRational total = 0;
  for (const auto& [outcome, p] : distribution.entries()) {
    total += p * outcome;
  }
  return total;
}

BigRational variance(const DistributionTable<int>& distribution) {
  BigRational second_moment = 0;
  for (const auto& [outcome, p] : distribution.entries()) {
    second_moment += p * outcome * outcome;
  }
  const BigRational first = mean(distribution);
  return second_moment - first * first;
}

BigRational expected_cherries(int n, int size_cap) {
  return mean(cherry_distribution(n, size_cap));
}

BigRational variance_cherries(int n, int size_cap) {
  return variance(cherry_distribution(n, size_cap));
}

BigRational expected_pitchforks(int m, int size_cap) {
  return mean(pitchfork_distribution(m, size_cap));
}

BigRational expected_pitchforks_by_recursion(int m) {
  if (m < 1) {
    throw std::out_of_range("expected_pitchforks_by_recursion: need m >= 1");
  }
  if (m == 1) {
    return 0;
  }
  BigRational value = 1;  // E(2): the unique two-node tree has one pitchfork.
  for (int k = 2; k < m; ++k) {
    // (k+1) E(k+1) = (k-2) E(k) + 2(k+1)/3
    value = (BigRational{k - 2} * value + BigRational{2 * (k + 1), 3}) /
            (k + 1);
  }
  return value;
}

std::vector<std::vector<BigRational>> f_series_coefficients(int n_max,
                                                            int size_cap) {
  if (n_max < 2) {
    throw std::out_of_range("f_series_coefficients: need n >= 2");
  }
  if (n_max - 1 > size_cap) {
    throw std::out_of_range("f_series_coefficients: size cap exceeded");
  }
  std::vector<std::vector<BigRational>> coefficients(
      static_cast<std::size_t>(n_max) + 1);
  JointCountTable table = JointCountTable::initial();
  for (int n = 2; n <= n_max; ++n) {
    if (table.size() != n - 1) {
      table = extend_counts(table);
    }
    const CherryDistribution dist = cherry_distribution(table);
    std::vector<BigRational>& row = coefficients[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(table.max_cherries()) + 1, 0);
    for (const auto& [o, p] : dist.entries()) {
      row[static_cast<std::size_t>(o)] = p;
    }
  }
  return coefficients;
}

}  // namespace rankedtree
