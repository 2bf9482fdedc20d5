#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace theta {

using i128 = __int128;
using u128 = unsigned __int128;

// Largest modulus accepted anywhere in the toolkit. Keeps h*j exact for
// h up to 2k and j up to 2k in 64-bit unsigned arithmetic.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

inline i128 checked_add(i128 x, i128 y) {
  i128 r;
  if (__builtin_add_overflow(x, y, &r)) throw std::range_error("128-bit accumulator overflow (add)");
  return r;
}

inline i128 checked_sub(i128 x, i128 y) {
  i128 r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::range_error("128-bit accumulator overflow (sub)");
  return r;
}

inline i128 checked_mul(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::range_error("128-bit accumulator overflow (mul)");
  return r;
}

// Division rounding toward -infinity.
template <typename T>
constexpr T floordiv(T n, T d) {
  T q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

// Remainder with the sign of the divisor (d > 0 gives a value in [0, d)).
template <typename T>
constexpr T floormod(T n, T d) {
  T r = n % d;
  if (r != 0 && ((r < 0) != (d < 0))) r += d;
  return r;
}

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs_u128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

std::string to_string(i128 v);
i128 parse_i128(const std::string& text);

}  // namespace theta
