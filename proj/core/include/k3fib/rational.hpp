#pragma once

#include <boost/rational.hpp>

#include <string>

namespace k3fib {

// Exact rational arithmetic; numerators and denominators stay tiny here
// (heights and correction terms on a K3 surface).
using rational = boost::rational<long long>;

inline std::string to_string(const rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace k3fib
