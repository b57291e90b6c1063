#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace rankedtree {

// All probabilities in the library are exact rationals; floating point shows
// up only in closed-form evaluation and convenience output columns.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

inline BigInt pow2(int exponent) { return BigInt{1} << exponent; }

// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const BigRational& value);

// Nearest double. Numerator and denominator can individually overflow the
// double range, so the division runs in a wide binary float first.
double to_double(const BigRational& value);

// 17 significant digits, enough to round-trip an IEEE double.
std::string to_decimal_string(double value);

inline std::string to_decimal_string(const BigRational& value) {
  return to_decimal_string(to_double(value));
}

}  // namespace rankedtree
