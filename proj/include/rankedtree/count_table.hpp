#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "rankedtree/big_rational.hpp"

namespace rankedtree {

// Exact sizes are capped to keep runtime and rational growth in check; the
// cap is an argument everywhere it applies, so callers can raise it.
inline constexpr int kDefaultSizeCap = 2000;

// Exact counts N_m(o, r) of increasing trees of size m with o leaf nodes
// (cherries) and r pitchforks. Grown one size at a time by the succession
// rule: a tree with parameters (o, r) at size m yields, at size m+1,
//
//   (o, r)     r times          (new leaf under a pitchfork's unary node)
//   (o, r+1)   o-r times        (new leaf under a non-pitchfork unary node)
//   (o+1, r-1) r times          (new leaf under a pitchfork's leaf)
//   (o+1, r)   m-2o+1-r times   (new leaf under any other leaf)
//
// so every tree of size m+1 is produced exactly once from its parent tree.
class JointCountTable {
 public:
  // Size 1: the single-node tree, one leaf, no pitchforks.
  static JointCountTable initial();

  int size() const { return m_; }

  int min_cherries() const { return 1; }
  int max_cherries() const { return (m_ + 1) / 2; }

  // Largest pitchfork count possible alongside `cherries` leaf nodes: each
  // pitchfork uses up one unary node and one leaf.
  int max_pitchforks(int cherries) const {
    const int unary = m_ - 2 * cherries + 1;
    return cherries < unary ? cherries : unary;
  }

  // Zero outside the support.
  const BigInt& count(int cherries, int pitchforks) const;

  BigInt total() const;

  // Index o: sum over r of N_m(o, r). Entry 0 is always zero.
  std::vector<BigInt> cherry_marginal() const;

  // Index r: sum over o of N_m(o, r).
  std::vector<BigInt> pitchfork_marginal() const;

  std::map<std::pair<int, int>, BigInt> nonzero_entries() const;

  void for_each_state(
      const std::function<void(int cherries, int pitchforks,
                               const BigInt& count)>& fn) const;

  bool operator==(const JointCountTable& other) const = default;

 private:
  friend JointCountTable extend_counts(const JointCountTable&);
  friend JointCountTable extend_counts_parallel(const JointCountTable&);

  JointCountTable(int m, std::vector<std::vector<BigInt>> rows)
      : m_(m), rows_(std::move(rows)) {}

  static std::vector<std::vector<BigInt>> empty_rows(int m);

  int m_ = 0;
  std::vector<std::vector<BigInt>> rows_;  // rows_[o-1][r]
};

// One succession-rule step, size m -> m+1. Serial reference: scatters each
// source state into its four successor states exactly as the rule reads.
JointCountTable extend_counts(const JointCountTable& table);

// Same step as a gather over destination states, parallelized with OpenMP.
// Bit-identical to extend_counts for any thread count: every destination is
// an independent sum of at most four source terms in a fixed order.
JointCountTable extend_counts_parallel(const JointCountTable& table);

// Table at size m, iterated up from size 1. Large sizes use the parallel
// kernel; the result does not depend on that choice.
JointCountTable joint_count_table(int m, int size_cap = kDefaultSizeCap);

}  // namespace rankedtree
