#pragma once

#include <cstdint>
#include <string>

#include "rabu/errors.hpp"

namespace rabu {

// Group orders can exceed 64 bits (an iterated wreath product over four
// Sym(3) factors already reaches 6^40), so exact arithmetic is done in
// 128 bits with loud overflow failures.
using Uint128 = unsigned __int128;

inline Uint128 checked_mul(Uint128 a, Uint128 b) {
  if (a != 0 && b > static_cast<Uint128>(-1) / a) {
    throw CapExceeded("128-bit overflow in exact order arithmetic");
  }
  return a * b;
}

inline Uint128 checked_pow(Uint128 base, std::uint64_t exp) {
  Uint128 result = 1;
  while (exp > 0) {
    if (exp & 1) result = checked_mul(result, base);
    exp >>= 1;
    if (exp > 0) base = checked_mul(base, base);
  }
  return result;
}

inline std::string to_string(Uint128 v) {
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace rabu
