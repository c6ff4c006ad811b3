#pragma once

#include <cstdint>
#include <string>

#include "nakayama/error.hpp"

// Overflow-checked 64-bit integer arithmetic. Counting code never wraps.
namespace nakayama::checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(Errc::overflow, std::to_string(x) + " + " + std::to_string(y));
  }
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw Error(Errc::overflow, std::to_string(x) + " - " + std::to_string(y));
  }
  return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw Error(Errc::overflow, std::to_string(x) + " * " + std::to_string(y));
  }
  return r;
}

inline std::int64_t square(std::int64_t x) { return mul(x, x); }

}  // namespace nakayama::checked
