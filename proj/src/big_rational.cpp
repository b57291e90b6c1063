#include "rankedtree/big_rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace rankedtree {

BigInt factorial(int n) {
  if (n < 0) {
    throw std::out_of_range("factorial: argument must be nonnegative");
  }
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

std::string to_fraction_string(const BigRational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

double to_double(const BigRational& value) {
  using Wide = boost::multiprecision::cpp_bin_float_50;
  const Wide num{numerator(value)};
  const Wide den{denominator(value)};
  return static_cast<double>(num / den);
}

std::string to_decimal_string(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace rankedtree
