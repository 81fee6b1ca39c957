#pragma once

#include <cstdint>
#include <stdexcept>

namespace lamfam {

// Cardinalities grow exponentially with term size; every count goes through
// these so an overflow throws instead of wrapping.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
  return r;
}

}  // namespace lamfam
