#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankedtree/big_rational.hpp"
#include "rankedtree/closed_forms.hpp"
#include "rankedtree/count_table.hpp"
#include "rankedtree/distributions.hpp"

using rankedtree::BigInt;
using rankedtree::BigRational;
using rankedtree::JointCountTable;

namespace {

using Entries = std::map<std::pair<int, int>, BigInt>;

Entries table_entries(int m) {
  return rankedtree::joint_count_table(m).nonzero_entries();
}

}  // namespace

TEST_CASE("count tables reproduce the printed expansions") {
  CHECK(table_entries(1) == Entries{{{1, 0}, 1}});
  CHECK(table_entries(2) == Entries{{{1, 1}, 1}});
  CHECK(table_entries(3) == Entries{{{1, 1}, 1}, {{2, 0}, 1}});
  CHECK(table_entries(4) == Entries{{{1, 1}, 1}, {{2, 0}, 1}, {{2, 1}, 3}});
  CHECK(table_entries(5) == Entries{{{1, 1}, 1},
                                    {{2, 0}, 1},
                                    {{2, 1}, 7},
                                    {{2, 2}, 3},
                                    {{3, 0}, 4}});
  CHECK(table_entries(6) == Entries{{{1, 1}, 1},
                                    {{2, 0}, 1},
                                    {{2, 1}, 12},
                                    {{2, 2}, 13},
                                    {{3, 0}, 9},
                                    {{3, 1}, 25}});
}

TEST_CASE("cherry marginals and totals at size 6") {
  const JointCountTable table = rankedtree::joint_count_table(6);
  CHECK(table.total() == 61);
  const std::vector<BigInt> marginal = table.cherry_marginal();
  CHECK(marginal[1] == 1);
  CHECK(marginal[2] == 26);
  CHECK(marginal[3] == 34);
}

TEST_CASE("parallel extension matches the serial reference exactly") {
  JointCountTable serial = JointCountTable::initial();
  JointCountTable parallel = JointCountTable::initial();
  for (int m = 1; m < 200; ++m) {
    serial = rankedtree::extend_counts(serial);
    parallel = rankedtree::extend_counts_parallel(parallel);
    REQUIRE(serial == parallel);
  }
  CHECK(serial.total() == rankedtree::euler_numbers_zigzag(201).back());
}

TEST_CASE("size caps and argument guards") {
  CHECK_THROWS_AS(rankedtree::joint_count_table(0), std::out_of_range);
  CHECK_THROWS_AS(rankedtree::joint_count_table(50, 10), std::out_of_range);
  CHECK_THROWS_AS(rankedtree::cherry_distribution(1), std::out_of_range);
  CHECK_THROWS_AS(rankedtree::identity_probability(1), std::out_of_range);
  CHECK_THROWS_AS(rankedtree::euler_numbers(0), std::out_of_range);
  CHECK_THROWS_AS(rankedtree::factorial(-1), std::out_of_range);
}

TEST_CASE("joint distribution at small sizes") {
  const auto m1 = rankedtree::joint_distribution(1);
  CHECK((m1.probability({1, 0}) == 1));

  const auto m3 = rankedtree::joint_distribution(3);
  CHECK((m3.probability({1, 1}) == BigRational{2, 3}));
  CHECK((m3.probability({2, 0}) == BigRational{1, 3}));
  CHECK((m3.probability({9, 9}) == 0));

  const auto m5 = rankedtree::joint_distribution(5);
  CHECK((m5.probability({2, 2}) == BigRational{1, 5}));
  CHECK(m5.sum() == 1);
}

TEST_CASE("cherry distributions match the printed F terms") {
  const auto n2 = rankedtree::cherry_distribution(2);
  CHECK(n2.probability(1) == 1);

  const auto n4 = rankedtree::cherry_distribution(4);
  CHECK((n4.probability(1) == BigRational{2, 3}));
  CHECK((n4.probability(2) == BigRational{1, 3}));

  const auto n6 = rankedtree::cherry_distribution(6);
  CHECK((n6.probability(1) == BigRational{2, 15}));
  CHECK((n6.probability(2) == BigRational{11, 15}));
  CHECK((n6.probability(3) == BigRational{2, 15}));
}

TEST_CASE("pitchfork distributions at sizes 1, 2 and 5") {
  const auto m1 = rankedtree::pitchfork_distribution(1);
  CHECK(m1.probability(0) == 1);

  const auto m2 = rankedtree::pitchfork_distribution(2);
  CHECK(m2.probability(1) == 1);

  const auto m5 = rankedtree::pitchfork_distribution(5);
  CHECK((m5.probability(0) == BigRational{1, 5}));
  CHECK((m5.probability(1) == BigRational{3, 5}));
  CHECK((m5.probability(2) == BigRational{1, 5}));
}

TEST_CASE("conditional pitchfork distributions at size 5") {
  const auto given_two = rankedtree::conditional_pitchfork_distribution(5, 2);
  CHECK((given_two.probability(0) == BigRational{1, 11}));
  CHECK((given_two.probability(1) == BigRational{7, 11}));
  CHECK((given_two.probability(2) == BigRational{3, 11}));

  const auto given_three =
      rankedtree::conditional_pitchfork_distribution(5, 3);
  CHECK(given_three.probability(0) == 1);

  const auto trivial = rankedtree::conditional_pitchfork_distribution(1, 1);
  CHECK(trivial.probability(0) == 1);

  CHECK_THROWS_AS(rankedtree::conditional_pitchfork_distribution(5, 4),
                  std::domain_error);
  CHECK_THROWS_AS(rankedtree::conditional_pitchfork_distribution(5, 0),
                  std::domain_error);
}

TEST_CASE("conditional means at size 5") {
  const JointCountTable table = rankedtree::joint_count_table(5);
  const auto means = rankedtree::conditional_pitchfork_means(table);
  REQUIRE(means.size() == 3);
  CHECK(means.at(1) == 1);
  CHECK((means.at(2) == BigRational{13, 11}));
  CHECK(means.at(3) == 0);
}

TEST_CASE("distribution tables enforce exact normalization") {
  using Table = rankedtree::DistributionTable<int>;
  CHECK_THROWS_AS((Table{Table::Map{{1, BigRational{1, 2}}}}),
                  std::logic_error);
  CHECK_THROWS_AS(
      (Table{Table::Map{{1, BigRational{3, 2}}, {2, BigRational{-1, 2}}}}),
      std::logic_error);
  const Table table{
      Table::Map{{1, BigRational{1, 2}}, {2, BigRational{1, 2}}, {3, 0}}};
  CHECK(table.entries().size() == 2);  // zero entries are dropped
  CHECK(table.probability(3) == 0);
  CHECK(table.probability(7) == 0);
}

TEST_CASE("identity probabilities for the worked sizes") {
  CHECK(rankedtree::identity_probability(2) == 1);
  CHECK(rankedtree::identity_probability(3) == 1);
  CHECK((rankedtree::identity_probability(4) == BigRational{5, 9}));
  CHECK((rankedtree::identity_probability(5) == BigRational{2, 9}));
  CHECK((rankedtree::identity_probability(6) == BigRational{16, 225}));
}

TEST_CASE("euler numbers against the independent zigzag recurrence") {
  const auto from_tables = rankedtree::euler_numbers(13);
  const auto from_zigzag = rankedtree::euler_numbers_zigzag(13);
  CHECK(from_tables == from_zigzag);
  CHECK(from_tables.front() == 1);
  CHECK(from_tables[5] == 16);
  CHECK(from_tables.back() == 2702765);
}

TEST_CASE("moments at the documented sizes") {
  CHECK(rankedtree::expected_cherries(9) == 3);
  CHECK((rankedtree::variance_cherries(9) == BigRational{2, 5}));
  CHECK(rankedtree::expected_cherries(2) == 1);
  CHECK(rankedtree::variance_cherries(2) == 0);
  CHECK((rankedtree::expected_cherries(4) == BigRational{4, 3}));
  CHECK((rankedtree::variance_cherries(4) == BigRational{2, 9}));

  CHECK(rankedtree::expected_pitchforks(2) == 1);
  CHECK(rankedtree::expected_pitchforks(5) == 1);
  CHECK(rankedtree::expected_pitchforks(11) == 2);
  CHECK(rankedtree::expected_pitchforks(1) == 0);
}

TEST_CASE("pitchfork mean recursion agrees with the distribution") {
  for (int m = 1; m <= 40; ++m) {
    CHECK(rankedtree::expected_pitchforks_by_recursion(m) ==
          rankedtree::expected_pitchforks(m));
  }
  // Closed form (m+1)/6 holds only beyond m = 2.
  CHECK((rankedtree::expected_pitchforks_by_recursion(2) ==
         BigRational{1}));
  CHECK((rankedtree::expected_pitchforks_by_recursion(30) ==
         BigRational{31, 6}));
}

TEST_CASE("f-series coefficients through z^8") {
  const auto series = rankedtree::f_series_coefficients(8);
  CHECK(series[2] == std::vector<BigRational>{0, 1});
  CHECK(series[3] == std::vector<BigRational>{0, 1});
  CHECK((series[4] ==
         std::vector<BigRational>{0, BigRational{2, 3}, BigRational{1, 3}}));
  CHECK((series[7] == std::vector<BigRational>{0, BigRational{2, 45},
                                               BigRational{26, 45},
                                               BigRational{17, 45}}));
  CHECK((series[8] == std::vector<BigRational>{0, BigRational{4, 315},
                                               BigRational{38, 105},
                                               BigRational{4, 7},
                                               BigRational{17, 315}}));
}

TEST_CASE("closed forms respect their domains") {
  CHECK_THROWS_AS(rankedtree::closed_form_y(0.5, 0.1), std::domain_error);
  CHECK_THROWS_AS(rankedtree::closed_form_y(0.7, 0.1), std::domain_error);
  CHECK_THROWS_AS(rankedtree::closed_form_y(0.1, 1.5), std::domain_error);
  CHECK_THROWS_AS(rankedtree::closed_form_f(1.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(rankedtree::closed_form_f(0.5, -1.5), std::domain_error);

  CHECK(rankedtree::closed_form_f(0.0, 0.7) == 0.0);

  const auto both = rankedtree::evaluate_closed_forms(0.25, 0.3);
  REQUIRE(both.y.has_value());
  REQUIRE(both.f.has_value());
  const auto f_only = rankedtree::evaluate_closed_forms(0.75, 0.3);
  CHECK(!f_only.y.has_value());
  REQUIRE(f_only.f.has_value());
  CHECK(*f_only.f == rankedtree::closed_form_f(0.75, 0.3));
}

TEST_CASE("truncated series match the closed forms to 1e-12") {
  const std::pair<double, double> points[]{{0.5, 0.1}, {0.25, 0.2}};
  for (const auto& [x, z] : points) {
    const double f_series = rankedtree::f_series_value(x, z, 30);
    CHECK(std::abs(f_series - rankedtree::closed_form_f(x, z)) <= 1e-12);
  }
  // Larger |z| needs a deeper truncation before the tail drops below 1e-12.
  CHECK(std::abs(rankedtree::f_series_value(0.1, 0.8, 60) -
                 rankedtree::closed_form_f(0.1, 0.8)) <= 1e-12);
  const std::pair<double, double> y_points[]{{0.25, 0.2}, {0.4, 0.5}};
  for (const auto& [x, z] : y_points) {
    const double y_series = rankedtree::y_series_value(x, z, 40);
    CHECK(std::abs(y_series - rankedtree::closed_form_y(x, z)) <= 1e-12);
  }
}

TEST_CASE("Y Taylor coefficients at x = 1/4") {
  // Series value at x=1/4 equals the partial sums of the printed
  // coefficients 1/4, 1/8, 5/96, 1/48, 1/120 times powers of z.
  const double z = 0.5;
  const std::vector<BigRational> coefficients{
      BigRational{1, 4}, BigRational{1, 8}, BigRational{5, 96},
      BigRational{1, 48}, BigRational{1, 120}};
  double expected = 0.0;
  double z_power = 1.0;
  for (std::size_t m = 0; m < coefficients.size(); ++m) {
    z_power *= z;
    expected += rankedtree::to_double(coefficients[m]) * z_power;
  }
  CHECK(std::abs(rankedtree::y_series_value(0.25, z, 5) - expected) <= 1e-15);
}
