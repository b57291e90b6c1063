#include "rankedtree/enumeration.hpp"

#include <stdexcept>
#include <string>

namespace rankedtree {

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(int target_size,
                 const std::function<void(const IncreasingTree&)>& visit)
      : target_size_(target_size), visit_(visit) {
    parent_.reserve(target_size);
    degree_.reserve(target_size);
  }

  void run() {
    parent_.push_back(0);
    degree_.push_back(0);
    expand();
  }

 private:
  void expand() {
    const int size = static_cast<int>(parent_.size());
    if (size == target_size_) {
      visit_(IncreasingTree{parent_});
      return;
    }
    for (std::int32_t attach = 1; attach <= size; ++attach) {
      if (degree_[attach - 1] >= 2) {
        continue;
      }
      parent_.push_back(attach);
      degree_.push_back(0);
      ++degree_[attach - 1];
      expand();
      --degree_[attach - 1];
      degree_.pop_back();
      parent_.pop_back();
    }
  }

  int target_size_;
  const std::function<void(const IncreasingTree&)>& visit_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int8_t> degree_;
};

}  // namespace

void for_each_increasing_tree(
    int m, const std::function<void(const IncreasingTree&)>& visit) {
  if (m < 1 || m > kMaxEnumerationSize) {
    throw std::out_of_range("enumeration size out of range: m must be in [1, " +
                            std::to_string(kMaxEnumerationSize) + "]");
  }
  TreeEnumerator enumerator{m, visit};
  enumerator.run();
}

std::vector<IncreasingTree> enumerate_increasing_trees(int m) {
  std::vector<IncreasingTree> trees;
  for_each_increasing_tree(
      m, [&trees](const IncreasingTree& tree) { trees.push_back(tree); });
  return trees;
}

IncreasingTree tree_from_merge_sequence(int n_leaves,
                                        std::span<const MergeChoice> merges) {
  if (n_leaves < 2) {
    throw std::out_of_range("merge sequence: need at least 2 initial lineages");
  }
  if (static_cast<int>(merges.size()) != n_leaves - 1) {
    throw std::invalid_argument(
        "merge sequence: expected exactly n-1 merges, got " +
        std::to_string(merges.size()));
  }
  const int m = n_leaves - 1;

  // top[id]: -1 once id is merged away, 0 while it is a bare leaf, otherwise
  // the label of the internal node currently at the top of the lineage.
  std::vector<std::int32_t> top(static_cast<std::size_t>(2 * n_leaves), -1);
  for (int id = 1; id <= n_leaves; ++id) {
    top[id] = 0;
  }

  std::vector<std::int32_t> parent(m, 0);
  for (int k = 1; k <= m; ++k) {
    const std::int32_t label = static_cast<std::int32_t>(n_leaves - k);
    const auto [a, b] = merges[k - 1];
    const std::int32_t max_id = static_cast<std::int32_t>(n_leaves + k - 1);
    if (a == b) {
      throw std::invalid_argument("merge sequence: lineages must be distinct");
    }
    for (const std::int32_t id : {a, b}) {
      if (id < 1 || id > max_id || top[id] < 0) {
        throw std::invalid_argument(
            "merge sequence: inactive lineage referenced: " +
            std::to_string(id));
      }
      if (top[id] > 0) {
        parent[top[id] - 1] = label;
      }
      top[id] = -1;
    }
    top[n_leaves + k] = label;
  }
  return IncreasingTree{std::move(parent)};
}

}  // namespace rankedtree
