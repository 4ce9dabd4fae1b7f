#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hgcount {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(BigInt base, unsigned exponent) {
  BigInt result = 1;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace hgcount
