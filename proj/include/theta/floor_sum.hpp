#pragma once

#include <cstdint>

#include "theta/wide.hpp"

namespace theta {

struct FloorSumArgs {
  std::int64_t n = 0;  // number of terms, >= 0
  std::int64_t m = 1;  // modulus, >= 1
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// sum_{i=0}^{n-1} [(a*i + b) / m], exact, in O(log(max(a, m))) steps.
/// Negative a and b are allowed. Throws std::domain_error for m < 1 or n < 0
/// and std::range_error if the result does not fit in 128 bits.
i128 floor_sum(const FloorSumArgs& args);

inline i128 floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b) {
  return floor_sum(FloorSumArgs{n, m, a, b});
}

}  // namespace theta
