#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace powclass {

// Exact counts. Everything on a counting path is arbitrary precision; no
// floating point anywhere.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigCount factorial(std::uint64_t n) {
  BigCount out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) out *= k;
  return out;
}

inline BigCount int_pow(const BigCount& base, std::uint64_t exp) {
  BigCount out = 1;
  BigCount b = base;
  while (exp > 0) {
    if (exp & 1) out *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return out;
}

inline std::string to_decimal(const BigCount& v) { return v.str(); }

// "3/4"; whole values render without the denominator.
inline std::string to_fraction(const BigRational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace powclass
