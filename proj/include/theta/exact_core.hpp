#pragma once

// Reference implementations by direct enumeration. These are the serial
// oracles every faster path in the toolkit is checked against.

#include <cstdint>
#include <string_view>

#include "theta/rational.hpp"

namespace theta {

enum class Method { naive, fast, closed_form };

std::string_view method_name(Method m);

/// Exact value of one of the theta sums, tagged with how it was obtained.
struct SumValue {
  std::int64_t value = 0;
  Method method = Method::naive;

  friend bool operator==(const SumValue&, const SumValue&) = default;
};

/// Throws std::domain_error for h < 1 or k < 1 and std::range_error when k
/// exceeds kMaxModulus or h exceeds 2*kMaxModulus.
void check_sum_args(std::int64_t h, std::int64_t k);

/// S(h,k) = sum_{j=1}^{k-1} (-1)^{j+1+[hj/k]}.
SumValue s_hk_naive(std::int64_t h, std::int64_t k);

/// S(k) = sum_{h=1}^{k-1} S(h,k). O(k^2).
SumValue s_k_naive(std::int64_t k);

/// T(h,k) = sum_{j=1}^{2k-1} (-1)^{j+1+[hj/k]}.
SumValue t_hk_naive(std::int64_t h, std::int64_t k);

/// T(k) = sum_{h=1}^{2k-1} T(h,k). O(k^2).
SumValue t_k_naive(std::int64_t k);

/// ((p/q)): zero when q divides p, otherwise p/q - [p/q] - 1/2.
Rational sawtooth(i128 p, i128 q);

/// Dedekind sum s(d,c) = sum_{j=1}^{c-1} ((dj/c))((j/c)).
Rational dedekind_s(std::int64_t d, std::int64_t c);

/// [p/q] for q > 0, rounding toward -infinity.
i128 greatest_integer(i128 p, i128 q);

}  // namespace theta
