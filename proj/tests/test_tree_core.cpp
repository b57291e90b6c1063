#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rankedtree/big_rational.hpp"
#include "rankedtree/enumeration.hpp"
#include "rankedtree/increasing_tree.hpp"

using rankedtree::BigRational;
using rankedtree::IncreasingTree;
using rankedtree::MergeChoice;

TEST_CASE("parent arrays are validated on construction") {
  CHECK_NOTHROW(IncreasingTree{{0}});
  CHECK_NOTHROW((IncreasingTree{{0, 1, 1}}));
  CHECK_NOTHROW((IncreasingTree{{0, 1, 2, 3}}));

  CHECK_THROWS_AS(IncreasingTree{{}}, std::invalid_argument);
  CHECK_THROWS_AS(IncreasingTree{{1}}, std::invalid_argument);  // bad root
  // Parent not smaller than child, zero parent, triple child.
  CHECK_THROWS_AS((IncreasingTree{{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS((IncreasingTree{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS((IncreasingTree{{0, 1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("outdegree profiles of the small examples") {
  const auto single = rankedtree::outdegree_profile(IncreasingTree{{0}});
  CHECK(single.leaf_nodes == 1);
  CHECK(single.unary_nodes == 0);
  CHECK(single.binary_nodes == 0);

  // Chain 1 -> 2 -> 3.
  const auto chain = rankedtree::outdegree_profile(IncreasingTree{{0, 1, 2}});
  CHECK(chain.leaf_nodes == 1);
  CHECK(chain.unary_nodes == 2);
  CHECK(chain.binary_nodes == 0);

  // Root 1 with children 2 and 3.
  const auto fork = rankedtree::outdegree_profile(IncreasingTree{{0, 1, 1}});
  CHECK(fork.leaf_nodes == 2);
  CHECK(fork.unary_nodes == 0);
  CHECK(fork.binary_nodes == 1);
}

TEST_CASE("pitchfork counting") {
  CHECK(rankedtree::count_pitchforks(IncreasingTree{{0}}) == 0);
  CHECK(rankedtree::count_pitchforks(IncreasingTree{{0, 1}}) == 1);
  CHECK(rankedtree::count_pitchforks(IncreasingTree{{0, 1, 1}}) == 0);
  CHECK(rankedtree::count_pitchforks(IncreasingTree{{0, 1, 2}}) == 1);
  // 1 -> 2 -> 3 and 2 -> 4: node 2 is binary, node 3 and 4 are leaves.
  CHECK(rankedtree::count_pitchforks(IncreasingTree{{0, 1, 2, 2}}) == 0);
}

TEST_CASE("coalescent probabilities of the size-3 trees") {
  CHECK(rankedtree::coalescent_probability(IncreasingTree{{0}}) == 1);
  CHECK((rankedtree::coalescent_probability(IncreasingTree{{0, 1, 2}}) ==
         BigRational{2, 3}));
  CHECK((rankedtree::coalescent_probability(IncreasingTree{{0, 1, 1}}) ==
         BigRational{1, 3}));
}

TEST_CASE("enumeration counts match the ranked tree sequence") {
  const std::vector<int> expected{1, 1, 2, 5, 16, 61, 272};  // sizes 1..7
  for (std::size_t m = 1; m <= expected.size(); ++m) {
    CHECK(rankedtree::enumerate_increasing_trees(static_cast<int>(m)).size() ==
          static_cast<std::size_t>(expected[m - 1]));
  }
  CHECK_THROWS_AS(rankedtree::enumerate_increasing_trees(0),
                  std::out_of_range);
  CHECK_THROWS_AS(
      rankedtree::enumerate_increasing_trees(rankedtree::kMaxEnumerationSize +
                                             1),
      std::out_of_range);
}

TEST_CASE("enumeration order is deterministic and duplicate-free") {
  const auto first = rankedtree::enumerate_increasing_trees(6);
  const auto second = rankedtree::enumerate_increasing_trees(6);
  REQUIRE(first.size() == second.size());
  CHECK(first == second);

  std::set<rankedtree::CanonicalCode> codes;
  for (const IncreasingTree& tree : first) {
    codes.insert(rankedtree::canonical_code(tree));
  }
  CHECK(codes.size() == first.size());
}

TEST_CASE("canonical codes separate the two size-3 trees") {
  const auto chain = rankedtree::canonical_code(IncreasingTree{{0, 1, 2}});
  const auto fork = rankedtree::canonical_code(IncreasingTree{{0, 1, 1}});
  CHECK(chain != fork);
  CHECK(chain == rankedtree::canonical_code(IncreasingTree{{0, 1, 2}}));
}

TEST_CASE("total coalescent probability over an enumeration is 1") {
  for (int m = 1; m <= 8; ++m) {
    BigRational total = 0;
    rankedtree::for_each_increasing_tree(m, [&](const IncreasingTree& tree) {
      total += rankedtree::coalescent_probability(tree);
    });
    CHECK(total == 1);
  }
}

TEST_CASE("merge sequences of the trivial coalescents") {
  // n=2: one merge, unique size-1 tree.
  const IncreasingTree pair =
      rankedtree::tree_from_merge_sequence(2, std::vector<MergeChoice>{{1, 2}});
  CHECK(pair == IncreasingTree{{0}});

  // n=3: all three first merges give the unique chain shape.
  for (const MergeChoice first : {MergeChoice{1, 2}, MergeChoice{1, 3},
                                  MergeChoice{2, 3}}) {
    const std::int32_t other = 6 - first.first - first.second;
    const IncreasingTree tree = rankedtree::tree_from_merge_sequence(
        3, std::vector<MergeChoice>{first, {4, other}});
    CHECK((tree == IncreasingTree{{0, 1}}));
  }
}

TEST_CASE("merge sequences reject malformed input") {
  using Merges = std::vector<MergeChoice>;
  // Wrong length.
  CHECK_THROWS_AS(rankedtree::tree_from_merge_sequence(3, Merges{{1, 2}}),
                  std::invalid_argument);
  // Lineage 1 is consumed by the first merge.
  CHECK_THROWS_AS(
      rankedtree::tree_from_merge_sequence(3, Merges{{1, 2}, {1, 3}}),
      std::invalid_argument);
  // Self-merge.
  CHECK_THROWS_AS(
      rankedtree::tree_from_merge_sequence(3, Merges{{2, 2}, {4, 1}}),
      std::invalid_argument);
  // Unknown lineage id.
  CHECK_THROWS_AS(
      rankedtree::tree_from_merge_sequence(3, Merges{{1, 9}, {4, 3}}),
      std::invalid_argument);
  CHECK_THROWS_AS(rankedtree::tree_from_merge_sequence(1, Merges{}),
                  std::out_of_range);
}

TEST_CASE("n=4 merge sequences reproduce the 2/3 and 1/3 split") {
  // All 3 * 3 * 1 ways of pairing the merge steps, counted by outcome.
  std::map<rankedtree::CanonicalCode, int> outcomes;
  const std::vector<std::int32_t> leaves{1, 2, 3, 4};
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      std::vector<std::int32_t> active;
      for (int leaf = 0; leaf < 4; ++leaf) {
        if (leaf != a && leaf != b) {
          active.push_back(leaves[static_cast<std::size_t>(leaf)]);
        }
      }
      active.push_back(5);  // first merged lineage
      for (int c = 0; c < 3; ++c) {
        for (int d = c + 1; d < 3; ++d) {
          std::vector<MergeChoice> merges{
              {leaves[static_cast<std::size_t>(a)],
               leaves[static_cast<std::size_t>(b)]},
              {active[static_cast<std::size_t>(c)],
               active[static_cast<std::size_t>(d)]}};
          std::int32_t remaining = 0;
          for (int slot = 0; slot < 3; ++slot) {
            if (slot != c && slot != d) {
              remaining = active[static_cast<std::size_t>(slot)];
            }
          }
          merges.push_back({6, remaining});
          const IncreasingTree tree =
              rankedtree::tree_from_merge_sequence(4, merges);
          outcomes[rankedtree::canonical_code(tree)] += 1;
        }
      }
    }
  }
  // 18 sequences: 12 land on the one-cherry tree, 6 on the two-cherry tree.
  REQUIRE(outcomes.size() == 2);
  const auto chain = rankedtree::canonical_code(IncreasingTree{{0, 1, 2}});
  const auto fork = rankedtree::canonical_code(IncreasingTree{{0, 1, 1}});
  CHECK(outcomes[chain] == 12);
  CHECK(outcomes[fork] == 6);
}

TEST_CASE("profile invariants hold over full enumerations") {
  for (int m = 1; m <= 9; ++m) {
    rankedtree::for_each_increasing_tree(m, [&](const IncreasingTree& tree) {
      const auto profile = rankedtree::outdegree_profile(tree);
      CHECK(profile.leaf_nodes + profile.unary_nodes + profile.binary_nodes ==
            m);
      CHECK(profile.leaf_nodes == profile.binary_nodes + 1);
      const int r = rankedtree::count_pitchforks(tree);
      CHECK(r >= 0);
      CHECK(r <= profile.leaf_nodes);
      CHECK(r <= profile.unary_nodes);
    });
  }
}
