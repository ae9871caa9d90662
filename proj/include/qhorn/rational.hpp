#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qhorn {

// All arithmetic in the library is exact: arbitrary-precision integers and
// reduced fractions. No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

/// Prints a rational in lowest terms as "p/q", or "p" when q == 1.
inline std::string to_string(const Rat& v) { return v.str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

}  // namespace qhorn
