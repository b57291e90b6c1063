#include "rankedtree/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "rankedtree/count_table.hpp"

namespace rankedtree {

namespace {

constexpr double kDenominatorFloor = 1e-9;

}  // namespace

double closed_form_y(double x, double z) {
  if (!(x < 0.5)) {
    throw std::domain_error("closed_form_y: requires x < 1/2");
  }
  if (!(std::abs(z) <= 1.0)) {
    throw std::domain_error("closed_form_y: requires |z| <= 1");
  }
  const double s = std::sqrt(1.0 - 2.0 * x);
  const double e = std::exp(s * z);
  const double denominator = (s - 1.0) * e + s + 1.0;
  if (std::abs(denominator) < kDenominatorFloor) {
    throw std::domain_error("closed_form_y: too close to a pole");
  }
  return 2.0 * (x * e - x) / denominator;
}

double closed_form_f(double x, double z) {
  if (!(x < 1.0)) {
    throw std::domain_error("closed_form_f: requires x < 1");
  }
  if (!(std::abs(z) <= 1.0)) {
    throw std::domain_error("closed_form_f: requires |z| <= 1");
  }
  const double s = std::sqrt(1.0 - x);
  const double e = std::exp(2.0 * z * s);
  const double denominator = (s - 1.0) * e + 1.0 + s;
  if (std::abs(denominator) < kDenominatorFloor) {
    throw std::domain_error("closed_form_f: too close to a pole");
  }
  return (z * x * e - z * x) / denominator;
}

ClosedFormValues evaluate_closed_forms(double x, double z) {
  ClosedFormValues values;
  if (x < 0.5) {
    values.y = closed_form_y(x, z);
  }
  if (x < 1.0) {
    values.f = closed_form_f(x, z);
  }
  return values;
}

double y_series_value(double x, double z, int order) {
  if (order < 1) {
    throw std::out_of_range("y_series_value: need order >= 1");
  }
  double total = 0.0;
  JointCountTable table = JointCountTable::initial();
  for (int m = 1; m <= order; ++m) {
    if (table.size() != m) {
      table = extend_counts(table);
    }
    const std::vector<BigInt> marginal = table.cherry_marginal();
    const BigInt m_factorial = factorial(m);
    const double z_power = std::pow(z, m);
    for (int o = table.min_cherries(); o <= table.max_cherries(); ++o) {
      const double coefficient =
          to_double(BigRational{marginal[static_cast<std::size_t>(o)],
                                m_factorial});
      total += coefficient * std::pow(x, o) * z_power;
    }
  }
  return total;
}

double f_series_value(double x, double z, int order) {
  if (order < 2) {
    throw std::out_of_range("f_series_value: need order >= 2");
  }
  double total = 0.0;
  JointCountTable table = JointCountTable::initial();
  for (int n = 2; n <= order; ++n) {
    const int m = n - 1;
    if (table.size() != m) {
      table = extend_counts(table);
    }
    const std::vector<BigInt> marginal = table.cherry_marginal();
    const BigInt m_factorial = factorial(m);
    const double z_power = std::pow(z, n);
    for (int o = table.min_cherries(); o <= table.max_cherries(); ++o) {
      const double probability = to_double(
          BigRational{marginal[static_cast<std::size_t>(o)] * pow2(m - o),
                      m_factorial});
      total += probability * std::pow(x, o) * z_power;
    }
  }
  return total;
}

}  // namespace rankedtree
