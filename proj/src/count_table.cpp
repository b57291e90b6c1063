#include "rankedtree/count_table.hpp"

#include <stdexcept>
#include <string>

namespace rankedtree {

namespace {

const BigInt kZero{0};

void check_table_size(int m, int size_cap) {
  if (m < 1 || m > size_cap) {
    throw std::out_of_range("size out of range: m must be in [1, " +
                            std::to_string(size_cap) + "]");
  }
}

}  // namespace

std::vector<std::vector<BigInt>> JointCountTable::empty_rows(int m) {
  std::vector<std::vector<BigInt>> rows((m + 1) / 2);
  for (int o = 1; o <= (m + 1) / 2; ++o) {
    const int unary = m - 2 * o + 1;
    const int r_max = o < unary ? o : unary;
    rows[o - 1].resize(r_max + 1);
  }
  return rows;
}

JointCountTable JointCountTable::initial() {
  auto rows = empty_rows(1);
  rows[0][0] = 1;
  return JointCountTable{1, std::move(rows)};
}

const BigInt& JointCountTable::count(int cherries, int pitchforks) const {
  if (cherries < 1 || cherries > max_cherries() || pitchforks < 0 ||
      pitchforks > max_pitchforks(cherries)) {
    return kZero;
  }
  return rows_[cherries - 1][pitchforks];
}

BigInt JointCountTable::total() const {
  BigInt sum = 0;
  for (const auto& row : rows_) {
    for (const auto& c : row) {
      sum += c;
    }
  }
  return sum;
}

std::vector<BigInt> JointCountTable::cherry_marginal() const {
  std::vector<BigInt> marginal(max_cherries() + 1);
  for (int o = 1; o <= max_cherries(); ++o) {
    for (const auto& c : rows_[o - 1]) {
      marginal[o] += c;
    }
  }
  return marginal;
}

std::vector<BigInt> JointCountTable::pitchfork_marginal() const {
  int r_max = 0;
  for (int o = 1; o <= max_cherries(); ++o) {
    if (max_pitchforks(o) > r_max) {
      r_max = max_pitchforks(o);
    }
  }
  std::vector<BigInt> marginal(r_max + 1);
  for (const auto& row : rows_) {
    for (std::size_t r = 0; r < row.size(); ++r) {
      marginal[r] += row[r];
    }
  }
  return marginal;
}

std::map<std::pair<int, int>, BigInt> JointCountTable::nonzero_entries() const {
  std::map<std::pair<int, int>, BigInt> entries;
  for_each_state([&entries](int o, int r, const BigInt& c) {
    entries.emplace(std::make_pair(o, r), c);
  });
  return entries;
}

void JointCountTable::for_each_state(
    const std::function<void(int, int, const BigInt&)>& fn) const {
  for (int o = 1; o <= max_cherries(); ++o) {
    const auto& row = rows_[o - 1];
    for (std::size_t r = 0; r < row.size(); ++r) {
      if (row[r] != 0) {
        fn(o, static_cast<int>(r), row[r]);
      }
    }
  }
}

JointCountTable extend_counts(const JointCountTable& table) {
  const int m = table.m_;
  auto rows = JointCountTable::empty_rows(m + 1);
  table.for_each_state([&rows, m](int o, int r, const BigInt& n) {
    if (r > 0) {
      rows[o - 1][r] += n * r;          // leaf under a pitchfork's unary node
      rows[o][r - 1] += n * r;          // leaf under a pitchfork's leaf
    }
    if (o - r > 0) {
      rows[o - 1][r + 1] += n * (o - r);  // leaf under a bare unary node
    }
    const int other_leaves = m - 2 * o + 1 - r;
    if (other_leaves > 0) {
      rows[o][r] += n * other_leaves;   // leaf under a non-pitchfork leaf
    }
  });
  return JointCountTable{m + 1, std::move(rows)};
}

JointCountTable extend_counts_parallel(const JointCountTable& table) {
  const int m = table.m_;
  const int next = m + 1;
  auto rows = JointCountTable::empty_rows(next);
  const int o_max = (next + 1) / 2;

#pragma omp parallel for schedule(dynamic)
  for (int o = 1; o <= o_max; ++o) {
    auto& row = rows[o - 1];
    for (int r = 0; r < static_cast<int>(row.size()); ++r) {
      BigInt sum = 0;
      if (r > 0) {
        const BigInt& stay = table.count(o, r);
        if (stay != 0) {
          sum += stay * r;
        }
        const BigInt& bare_unary = table.count(o, r - 1);
        if (bare_unary != 0) {
          sum += bare_unary * (o - r + 1);
        }
      }
      const BigInt& fork_leaf = table.count(o - 1, r + 1);
      if (fork_leaf != 0) {
        sum += fork_leaf * (r + 1);
      }
      const BigInt& other_leaf = table.count(o - 1, r);
      if (other_leaf != 0) {
        sum += other_leaf * (m - 2 * (o - 1) + 1 - r);
      }
      row[r] = std::move(sum);
    }
  }
  return JointCountTable{next, std::move(rows)};
}

JointCountTable joint_count_table(int m, int size_cap) {
  check_table_size(m, size_cap);
  JointCountTable table = JointCountTable::initial();
  for (int k = 1; k < m; ++k) {
    table = k < 64 ? extend_counts(table) : extend_counts_parallel(table);
  }
  return table;
}

}  // namespace rankedtree
