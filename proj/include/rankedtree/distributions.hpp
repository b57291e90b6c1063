#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankedtree/big_rational.hpp"
#include "rankedtree/count_table.hpp"

namespace rankedtree {

// A finite probability table: positive exact probabilities summing to 1.
// Zero-probability outcomes are dropped; construction checks the invariant.
template <typename Outcome>
class DistributionTable {
 public:
  using Map = std::map<Outcome, BigRational>;

  explicit DistributionTable(Map entries) : entries_(std::move(entries)) {
    BigRational sum = 0;
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (it->second < 0) {
        throw std::logic_error("distribution: negative probability");
      }
      if (it->second == 0) {
        it = entries_.erase(it);
        continue;
      }
      sum += it->second;
      ++it;
    }
    if (sum != 1) {
      throw std::logic_error("distribution: probabilities do not sum to 1");
    }
  }

  const Map& entries() const { return entries_; }

  BigRational probability(const Outcome& outcome) const {
    const auto it = entries_.find(outcome);
    return it == entries_.end() ? BigRational{0} : it->second;
  }

  BigRational sum() const {
    BigRational total = 0;
    for (const auto& [outcome, p] : entries_) {
      total += p;
    }
    return total;
  }

  bool operator==(const DistributionTable& other) const = default;

 private:
  Map entries_;
};

using JointOutcome = std::pair<int, int>;  // (cherries, pitchforks)
using JointDistribution = DistributionTable<JointOutcome>;
using CherryDistribution = DistributionTable<int>;
using PitchforkDistribution = DistributionTable<int>;

// P_m(o, r) = N_m(o, r) * 2^(m-o) / m! over increasing trees of size m.
JointDistribution joint_distribution(const JointCountTable& table);
JointDistribution joint_distribution(int m, int size_cap = kDefaultSizeCap);

// Cherry distribution of ranked trees with n leaves (n >= 2): the o-marginal
// of the joint distribution at m = n-1.
CherryDistribution cherry_distribution(const JointCountTable& table);
CherryDistribution cherry_distribution(int n, int size_cap = kDefaultSizeCap);

// Pitchfork distribution of increasing trees of size m: the r-marginal.
PitchforkDistribution pitchfork_distribution(const JointCountTable& table);
PitchforkDistribution pitchfork_distribution(int m,
                                             int size_cap = kDefaultSizeCap);

// P_m(r | o): the coalescent weight 2^(m-o)/m! is constant within a cherry
// class, so this is N_m(o, r) / sum_r N_m(o, r). Throws std::domain_error
// when `cherries` is outside the support.
PitchforkDistribution conditional_pitchfork_distribution(
    const JointCountTable& table, int cherries);
PitchforkDistribution conditional_pitchfork_distribution(
    int m, int cherries, int size_cap = kDefaultSizeCap);

// E[r | o] for every cherry count in the support.
std::map<int, BigRational> conditional_pitchfork_means(
    const JointCountTable& table);

// Probability that two independently generated ranked trees of size n are
// identical: sum over trees of the squared coalescent probability, evaluated
// as sum_o C_{n-1}(o) * (2^(n-1-o)/(n-1)!)^2 from the count table.
BigRational identity_probability(int n, int size_cap = kDefaultSizeCap);

// Ranked tree counts |R_1|..|R_k| (Euler numbers 1,1,1,2,5,16,61,272,...),
// computed as totals of the succession-rule tables.
std::vector<BigInt> euler_numbers(int k_max);

// The same sequence from the boustrophedon (zigzag) recurrence
//   E(0,0) = 1,  E(n,0) = 0,  E(n,k) = E(n,k-1) + E(n-1,n-k),
// entirely independent of the tree machinery; serves as a cross-check.
std::vector<BigInt> euler_numbers_zigzag(int k_max);

BigRational mean(const DistributionTable<int>& distribution);
BigRational variance(const DistributionTable<int>& distribution);

// First two cherry moments of ranked trees with n leaves, exact. Closed
// forms exist but only in limited ranges (n/3 for n > 2, 2n/45 for n > 6);
// these always come from the distribution itself.
BigRational expected_cherries(int n, int size_cap = kDefaultSizeCap);
BigRational variance_cherries(int n, int size_cap = kDefaultSizeCap);

// Expected pitchfork count of increasing trees of size m, exact, from the
// distribution. Equals (m+1)/6 for m > 2.
BigRational expected_pitchforks(int m, int size_cap = kDefaultSizeCap);

// Independent route to the same value via the recursion
//   E(2) = 1,  (m+1) E(m+1) = (m-2) E(m) + 2(m+1)/3
// (E(1) = 0: the single-node tree has no pitchfork).
BigRational expected_pitchforks_by_recursion(int m);

// Coefficient lists of the cherry generating series: result[n][o] is the
// probability of o cherries at size n, i.e. the coefficient of x^o z^n.
// Entries below n = 2 are empty.
std::vector<std::vector<BigRational>> f_series_coefficients(
    int n_max, int size_cap = kDefaultSizeCap);

}  // namespace rankedtree
