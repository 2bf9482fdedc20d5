#include "theta/fast_kernels.hpp"

#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "theta/floor_sum.hpp"

namespace theta {

namespace {

// sum_{i=0}^{n-1} ([(a i + b)/m] mod 2)
i128 parity_count(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b) {
  return floor_sum(n, m, a, b) - 2 * floor_sum(n, 2 * m, a, b);
}

std::int64_t s_hk_value(std::int64_t h, std::int64_t k) {
  // Even j = 2i, i = 1..E contribute -1 + 2*parity; odd j = 2i+1, i = 0..O-1
  // contribute 1 - 2*parity.
  const std::int64_t evens = (k - 1) / 2;
  const std::int64_t odds = k / 2;
  i128 even_par = parity_count(evens + 1, k, 2 * h, 0);
  i128 odd_par = parity_count(odds, k, 2 * h, h);
  return static_cast<std::int64_t>(-evens + 2 * even_par + odds - 2 * odd_par);
}

}  // namespace

SumValue s_hk_fast(std::int64_t h, std::int64_t k) {
  check_sum_args(h, k);
  return {s_hk_value(h, k), Method::fast};
}

SumValue s_k_fast(std::int64_t k) {
  check_sum_args(1, k);
  std::int64_t total = 0;
  for (std::int64_t h = 1; h < k; ++h) total += s_hk_value(h, k);
  return {total, Method::fast};
}

SumValue s_k_fast_parallel(std::int64_t k, int threads) {
  check_sum_args(1, k);
  if (threads <= 0) threads = omp_get_max_threads();
  std::int64_t total = 0;
#pragma omp parallel for num_threads(threads) reduction(+ : total) schedule(static)
  for (std::int64_t h = 1; h < k; ++h) total += s_hk_value(h, k);
  return {total, Method::fast};
}

std::int64_t r_jk(std::int64_t j, std::int64_t k) {
  check_sum_args(1, k);
  if (j < 1 || j > k - 1) throw std::domain_error("r_jk requires 1 <= j <= k-1");
  i128 halves = floor_sum(k, 2 * k, j, 0);
  if (std::gcd(j, k) == 1) {
    return static_cast<std::int64_t>(static_cast<i128>(j - 1) * (k - 1) / 2 - 2 * halves);
  }
  return static_cast<std::int64_t>(floor_sum(k, k, j, 0) - 2 * halves);
}

std::int64_t gcd_sum_odd(std::int64_t k) {
  if (k < 1 || k % 2 == 0) throw std::domain_error("gcd_sum_odd requires odd k >= 1");
  std::int64_t total = 0;
  for (std::int64_t h = 1; h <= 2 * k - 1; h += 2) total += std::gcd(k, h);
  return total;
}

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::domain_error("totient requires n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t a_n_single(std::int64_t n) {
  if (n < 1) throw std::domain_error("a_n requires n >= 1");
  if (n % 2 == 0) return 0;
  std::uint64_t total = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t e = n / d;
    total += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(totient(e));
    if (e != d) total += static_cast<std::uint64_t>(e) * static_cast<std::uint64_t>(totient(d));
  }
  return total;
}

SumValue t_k_closed(std::int64_t k) {
  check_sum_args(1, k);
  if (k % 2 == 1) {
    auto a = static_cast<std::int64_t>(a_n_single(k));
    return {2 * k - 1 - 2 * a, Method::closed_form};
  }
  std::int64_t total = 0;
  for (std::int64_t h = 2; h <= 2 * k - 1; h += 4) total += 2 * std::gcd(h, k);
  return {2 * k - 1 - total, Method::closed_form};
}

SumValue t_hk_closed(std::int64_t h, std::int64_t k) {
  check_sum_args(h, k);
  // Every printed case is an instance of this; the k = 0, h = 0 (mod 4) one
  // only when h and k carry the same power of 2.
  const std::int64_t g = std::gcd(h, k);
  if ((h / g) % 2 == 1 && (k / g) % 2 == 1) return {1 - 2 * g, Method::closed_form};
  return {1, Method::closed_form};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

}  // namespace theta
