#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace qpf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// k!! for odd k >= -1 (with (-1)!! = 1).
inline BigInt double_factorial(long k) {
  if (k < -1 || k % 2 == 0)
    throw std::domain_error("double_factorial: argument must be odd and >= -1");
  BigInt r = 1;
  for (long j = k; j >= 3; j -= 2) r *= j;
  return r;
}

inline BigInt factorial(long k) {
  if (k < 0) throw std::domain_error("factorial: negative argument");
  BigInt r = 1;
  for (long j = 2; j <= k; ++j) r *= j;
  return r;
}

}  // namespace qpf
