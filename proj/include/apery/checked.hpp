#pragma once

#include <cstdint>
#include <string>

#include "apery/error.hpp"

namespace apery {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline Int sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline Int mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return out;
}

}  // namespace checked

/// Non-negative residue of `n` modulo `m` (m > 0).
inline Int mod(Int n, Int m) {
  Int r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace apery
