#pragma once

// Plain-text model records:
//
//   p = 11
//   n = 2
//   a1 = []
//   a2 = [1]
//   a3 = []
//   a4 = []
//   a6 = [0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]
//
// Coefficients are ascending-degree integers, reduced mod p on parse.
// Blank lines and lines starting with '#' are ignored; missing a_i default
// to zero.  print_model_record emits the canonical form (all five a_i,
// fixed key order, reduced coefficients), and parse/print round-trip
// exactly on canonical records.

#include <iosfwd>
#include <string>

#include "k3fib/weierstrass.hpp"

namespace k3fib {

weierstrass_model parse_model_record(std::istream& in);
weierstrass_model parse_model_record(const std::string& text);
std::string print_model_record(const weierstrass_model& m);

}  // namespace k3fib
