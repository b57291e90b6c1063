#include "rankedtree/increasing_tree.hpp"

#include <stdexcept>

namespace rankedtree {

namespace {

std::vector<std::int8_t> child_counts(const IncreasingTree& tree) {
  std::vector<std::int8_t> degree(tree.size(), 0);
  const auto parents = tree.parents();
  for (std::size_t i = 1; i < parents.size(); ++i) {
    ++degree[parents[i] - 1];
  }
  return degree;
}

}  // namespace

IncreasingTree::IncreasingTree(std::vector<std::int32_t> parent)
    : parent_(std::move(parent)) {
  if (parent_.empty()) {
    throw std::invalid_argument("increasing tree: size must be at least 1");
  }
  if (parent_[0] != 0) {
    throw std::invalid_argument("increasing tree: node 1 must be the root");
  }
  std::vector<std::int8_t> degree(parent_.size(), 0);
  for (std::size_t i = 1; i < parent_.size(); ++i) {
    const std::int32_t p = parent_[i];
    if (p < 1 || p > static_cast<std::int32_t>(i)) {
      throw std::invalid_argument(
          "increasing tree: parent label must be positive and smaller than "
          "the child label");
    }
    if (++degree[p - 1] > 2) {
      throw std::invalid_argument("increasing tree: outdegree exceeds 2");
    }
  }
}

OutdegreeProfile outdegree_profile(const IncreasingTree& tree) {
  OutdegreeProfile profile;
  for (const std::int8_t d : child_counts(tree)) {
    if (d == 0) {
      ++profile.leaf_nodes;
    } else if (d == 1) {
      ++profile.unary_nodes;
    } else {
      ++profile.binary_nodes;
    }
  }
  return profile;
}

int count_cherries(const IncreasingTree& tree) {
  return outdegree_profile(tree).leaf_nodes;
}

int count_pitchforks(const IncreasingTree& tree) {
  const auto degree = child_counts(tree);
  // only_child[i] is the unique child label of node i+1 while its degree is 1
  std::vector<std::int32_t> only_child(tree.size(), 0);
  const auto parents = tree.parents();
  for (std::size_t i = 1; i < parents.size(); ++i) {
    only_child[parents[i] - 1] = static_cast<std::int32_t>(i + 1);
  }
  int pitchforks = 0;
  for (int i = 0; i < tree.size(); ++i) {
    if (degree[i] == 1 && degree[only_child[i] - 1] == 0) {
      ++pitchforks;
    }
  }
  return pitchforks;
}

BigRational coalescent_probability(const IncreasingTree& tree) {
  const int m = tree.size();
  const int cherries = count_cherries(tree);
  return BigRational{pow2(m - cherries), factorial(m)};
}

CanonicalCode canonical_code(const IncreasingTree& tree) {
  const auto parents = tree.parents();
  std::string bytes;
  bytes.reserve(4 * (parents.size() + 1));
  const auto append_u32 = [&bytes](std::uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) {
      bytes.push_back(static_cast<char>((v >> shift) & 0xff));
    }
  };
  append_u32(static_cast<std::uint32_t>(parents.size()));
  for (const std::int32_t p : parents) {
    append_u32(static_cast<std::uint32_t>(p));
  }
  return CanonicalCode{std::move(bytes)};
}

}  // namespace rankedtree
