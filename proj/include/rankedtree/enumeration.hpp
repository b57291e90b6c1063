#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rankedtree/increasing_tree.hpp"

namespace rankedtree {

// Largest size accepted by the exhaustive enumerator. Tree counts follow the
// Euler numbers (A000111), so m = 12 already means 2,702,765 trees; beyond
// that the full enumeration stops being useful as a test oracle.
inline constexpr int kMaxEnumerationSize = 12;

// Visits every increasing tree of size m exactly once, in a deterministic
// order: each tree of size k spawns its size-(k+1) extensions by attaching
// node k+1 to the nodes of outdegree < 2 in increasing label order, and the
// walk is depth first. The visited tree is only valid during the callback.
void for_each_increasing_tree(
    int m, const std::function<void(const IncreasingTree&)>& visit);

std::vector<IncreasingTree> enumerate_increasing_trees(int m);

// One coalescence event: the two active lineages being merged.
struct MergeChoice {
  std::int32_t first = 0;
  std::int32_t second = 0;
};

// Builds the increasing tree left by running a coalescent merge history over
// n labelled lineages. Leaves are the lineages 1..n; the k-th merge joins two
// active lineages into the new lineage n+k and becomes the internal node with
// rank label n-k, so the first merge gets label n-1 and the last the root
// label 1. Leaf identities do not survive into the result. Throws
// std::invalid_argument on a malformed sequence (wrong length, inactive or
// repeated lineage).
IncreasingTree tree_from_merge_sequence(int n_leaves,
                                        std::span<const MergeChoice> merges);

}  // namespace rankedtree
