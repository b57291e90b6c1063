#pragma once

#include <optional>

#include "rankedtree/big_rational.hpp"

namespace rankedtree {

// Closed form of the bivariate cherry series over increasing trees,
//
//   Y(x, z) = 2 (x e^{sqrt(1-2x) z} - x)
//             / ((sqrt(1-2x) - 1) e^{sqrt(1-2x) z} + sqrt(1-2x) + 1),
//
// valid for x < 1/2. Throws std::domain_error outside that range.
double closed_form_y(double x, double z);

// Closed form of the cherry series over ranked trees,
//
//   F(x, z) = (z x e^{2 z sqrt(1-x)} - z x)
//             / ((sqrt(1-x) - 1) e^{2 z sqrt(1-x)} + 1 + sqrt(1-x)),
//
// valid for x < 1 and |z| <= 1. Throws std::domain_error outside that range.
double closed_form_f(double x, double z);

struct ClosedFormValues {
  std::optional<double> y;  // absent when x >= 1/2
  std::optional<double> f;  // absent when x >= 1
};

// Evaluates both closed forms at once, leaving a component unset instead of
// throwing when its argument lies outside the region of validity. F is
// defined on a strictly larger x-range than Y, so callers probing x in
// [1/2, 1) still get the F value.
ClosedFormValues evaluate_closed_forms(double x, double z);

// Truncated series evaluated exactly term by term (each coefficient is a
// rational from the count tables) and only then rounded to double:
//   Y: sum over sizes 1..order of sum_o C_m(o) x^o z^m / m!
//   F: sum over leaf counts 2..order of sum_o P_n(o) x^o z^n
double y_series_value(double x, double z, int order);
double f_series_value(double x, double z, int order);

}  // namespace rankedtree
