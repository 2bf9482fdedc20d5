#include "theta/exact_core.hpp"

#include <stdexcept>

namespace theta {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::fast: return "fast";
    case Method::closed_form: return "closed-form";
  }
  return "unknown";
}

void check_sum_args(std::int64_t h, std::int64_t k) {
  if (h < 1 || k < 1) throw std::domain_error("h and k must be positive");
  if (k > kMaxModulus) throw std::range_error("modulus k exceeds 2^31");
  if (h > 2 * kMaxModulus) throw std::range_error("h exceeds 2^32; h*j would not stay exact");
}

namespace {

// Sign of (-1)^{j+1+[hj/k]} summed over j in [1, last]. Products stay below 2^64.
std::int64_t alternating_sum(std::uint64_t h, std::uint64_t k, std::uint64_t last) {
  std::int64_t total = 0;
  for (std::uint64_t j = 1; j <= last; ++j) {
    std::uint64_t exponent = j + 1 + (h * j) / k;
    total += (exponent & 1U) ? -1 : 1;
  }
  return total;
}

}  // namespace

SumValue s_hk_naive(std::int64_t h, std::int64_t k) {
  check_sum_args(h, k);
  auto value = alternating_sum(static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(k),
                               static_cast<std::uint64_t>(k - 1));
  return {value, Method::naive};
}

SumValue s_k_naive(std::int64_t k) {
  check_sum_args(1, k);
  std::int64_t total = 0;
  for (std::int64_t h = 1; h < k; ++h) total += s_hk_naive(h, k).value;
  return {total, Method::naive};
}

SumValue t_hk_naive(std::int64_t h, std::int64_t k) {
  check_sum_args(h, k);
  auto value = alternating_sum(static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(k),
                               static_cast<std::uint64_t>(2 * k - 1));
  return {value, Method::naive};
}

SumValue t_k_naive(std::int64_t k) {
  check_sum_args(1, k);
  std::int64_t total = 0;
  for (std::int64_t h = 1; h <= 2 * k - 1; ++h) total += t_hk_naive(h, k).value;
  return {total, Method::naive};
}

i128 greatest_integer(i128 p, i128 q) {
  if (q <= 0) throw std::domain_error("greatest_integer requires a positive denominator");
  return floordiv(p, q);
}

Rational sawtooth(i128 p, i128 q) {
  if (q <= 0) throw std::domain_error("sawtooth requires q >= 1");
  i128 r = floormod(p, q);
  if (r == 0) return Rational(0);
  // r/q - 1/2 = (2r - q) / 2q
  return Rational(checked_sub(checked_mul(2, r), q), checked_mul(2, q));
}

Rational dedekind_s(std::int64_t d, std::int64_t c) {
  if (c < 1) throw std::domain_error("dedekind_s requires c >= 1");
  // Each product ((dj/c))((j/c)) is an integer over 4c^2; accumulate the
  // numerators and reduce once. j/c is never an integer for 0 < j < c.
  i128 numerator = 0;
  const i128 cc = c;
  for (std::int64_t j = 1; j < c; ++j) {
    const i128 r = floormod(checked_mul(d, j), cc);
    if (r == 0) continue;
    numerator = checked_add(numerator, (2 * r - cc) * (2 * static_cast<i128>(j) - cc));
  }
  return Rational(numerator, checked_mul(4 * cc, cc));
}

}  // namespace theta
