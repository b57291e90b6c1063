#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rankedtree/big_rational.hpp"

namespace rankedtree {

// A 0-1-2-increasing tree of size m. Nodes carry the intrinsic labels 1..m,
// node 1 is the root, every child label exceeds its parent label, and every
// outdegree is 0, 1 or 2. Such a tree is the leaf-stripped form of a ranked
// tree with n = m+1 leaves, so per-tree statistics of the ranked tree are
// read off the increasing tree directly.
class IncreasingTree {
 public:
  // parent[0] is the root sentinel 0; parent[i] is the parent label of the
  // node labelled i+1. Throws std::invalid_argument if the array is not a
  // valid increasing tree.
  explicit IncreasingTree(std::vector<std::int32_t> parent);

  int size() const { return static_cast<int>(parent_.size()); }

  std::int32_t parent_of(int label) const { return parent_[label - 1]; }

  std::span<const std::int32_t> parents() const { return parent_; }

  bool operator==(const IncreasingTree& other) const = default;

 private:
  std::vector<std::int32_t> parent_;
};

struct OutdegreeProfile {
  int leaf_nodes = 0;    // outdegree 0: cherries of the ranked tree
  int unary_nodes = 0;   // outdegree 1
  int binary_nodes = 0;  // outdegree 2

  bool operator==(const OutdegreeProfile&) const = default;
};

OutdegreeProfile outdegree_profile(const IncreasingTree& tree);

// Number of cherries of the corresponding ranked tree (= leaf nodes here).
int count_cherries(const IncreasingTree& tree);

// A pitchfork is a 2-node subtree: a unary node whose only child is a leaf
// (equivalently, a 3-leaf subtree of the ranked tree).
int count_pitchforks(const IncreasingTree& tree);

// Probability of the corresponding ranked tree of size n = m+1 under the
// coalescent process: 2^(m-o) / m! with o the number of leaf nodes.
BigRational coalescent_probability(const IncreasingTree& tree);

// Fixed byte serialization of the parent array. Labels are intrinsic to
// increasing trees, so two trees are identical iff their codes are equal.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const IncreasingTree& tree);

}  // namespace rankedtree
