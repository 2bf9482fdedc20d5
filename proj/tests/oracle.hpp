#pragma once

// Brute-force reference values, written independently of the library.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline int sign(std::int64_t j, std::int64_t h, std::int64_t k) {
  return ((j + 1 + (h * j) / k) % 2 == 0) ? 1 : -1;
}

inline std::int64_t S(std::int64_t h, std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t j = 1; j < k; ++j) s += sign(j, h, k);
  return s;
}

inline std::int64_t T(std::int64_t h, std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t j = 1; j < 2 * k; ++j) s += sign(j, h, k);
  return s;
}

inline std::int64_t Sk(std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t h = 1; h < k; ++h) s += S(h, k);
  return s;
}

inline std::int64_t Tk(std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t h = 1; h < 2 * k; ++h) s += T(h, k);
  return s;
}

inline std::int64_t floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b) {
  std::int64_t s = 0;
  for (std::int64_t i = 0; i < n; ++i) s += floordiv(a * i + b, m);
  return s;
}

inline std::int64_t phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

// sum_{d|n} d*phi(n/d) for odd n, 0 for even n.
inline std::int64_t a(std::int64_t n) {
  if (n % 2 == 0) return 0;
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d * phi(n / d);
  }
  return s;
}

inline bool prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> primes_upto(std::int64_t n) {
  std::vector<bool> composite(static_cast<std::size_t>(n + 1));
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

}  // namespace oracle
