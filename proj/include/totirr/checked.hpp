#pragma once

#include <cstdint>

#include "totirr/errors.hpp"

namespace totirr {

/// Signed accumulator type for all integer-valued indices and bounds.
using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <class... Rest>
Int mul(Int a, Int b, Rest... rest) {
  return mul(mul(a, b), Int(rest)...);
}

}  // namespace checked
}  // namespace totirr
