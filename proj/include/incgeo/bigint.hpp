#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace incgeo {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& b, std::uint64_t e) {
  BigInt r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace incgeo
