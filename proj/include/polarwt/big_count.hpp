#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polarwt {

using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2(unsigned e) {
  BigCount v = 1;
  return v << e;
}

inline std::string to_decimal(const BigCount& v) { return v.str(); }

BigCount parse_decimal(const std::string& s);

// Rounded scientific rendering such as "1.835008e+06".
std::string to_scientific(const BigCount& v, int significant = 7);

}  // namespace polarwt
