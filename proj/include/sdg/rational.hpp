#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sdg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline std::string num_str(const Rational& r) { return numerator(r).str(); }
inline std::string den_str(const Rational& r) { return denominator(r).str(); }

}  // namespace sdg
