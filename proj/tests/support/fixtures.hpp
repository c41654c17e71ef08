#pragma once

// Hand-expanded generators of the Abhyankar subring, kept independent of the
// library's recurrence so tests can compare against them.
//   f3 = (2 f2 - 1) T2 = 2 T1 T2^2 - T2
//   f4 = (3 f3 - 1) T2 = 6 T1 T2^3 - 3 T2^2 - T2
//   f5 = (4 f4 - 1) T2 = 24 T1 T2^4 - 12 T2^3 - 4 T2^2 - T2

#include <string>

#include "semiring_lab/poly/io.hpp"

namespace semiring_lab::testing {

inline const char* const kF2 = "T1*T2";
inline const char* const kF3 = "2*T1*T2^2 - T2";
inline const char* const kF4 = "6*T1*T2^3 - 3*T2^2 - T2";
inline const char* const kF5 = "24*T1*T2^4 - 12*T2^3 - 4*T2^2 - T2";

inline Polynomial ambient(const std::string& text, std::size_t n = 2, Domain d = Domain::integer) {
  return parse_polynomial(text, VarNames::ambient(n), d);
}

inline Polynomial tagged(const std::string& text, std::size_t k, Domain d = Domain::integer) {
  return parse_polynomial(text, VarNames::tags(k), d);
}

}  // namespace semiring_lab::testing
