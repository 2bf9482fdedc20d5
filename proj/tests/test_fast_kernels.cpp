#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "theta/exact_core.hpp"
#include "theta/fast_kernels.hpp"

using namespace theta;

TEST_CASE("s_hk_fast examples") {
  CHECK(s_hk_fast(9, 10).value == 9);
  CHECK(s_hk_fast(1, 3).value == 0);
  CHECK(s_hk_fast(2, 3).value == 2);
  CHECK(s_hk_fast(7, 10).value == 3);
  CHECK(s_hk_fast(3, 2).value == -1);
  CHECK(s_hk_fast(2, 3).method == Method::fast);
}

TEST_CASE("s_hk_fast equals the oracle on all small pairs") {
  for (std::int64_t k = 1; k <= 150; ++k) {
    for (std::int64_t h = 1; h <= k + 5; ++h) REQUIRE(s_hk_fast(h, k).value == oracle::S(h, k));
  }
}

TEST_CASE("s_hk_fast equals naive at random large moduli") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> kd(2, 1000000);
  for (int i = 0; i < 200; ++i) {
    const auto k = kd(rng);
    const auto h = std::uniform_int_distribution<std::int64_t>(1, 2 * k)(rng);
    REQUIRE(s_hk_fast(h, k).value == s_hk_naive(h, k).value);
  }
}

TEST_CASE("s_hk_fast near the modulus limit") {
  const std::int64_t k = (std::int64_t{1} << 31) - 1;  // prime
  CHECK(s_hk_fast(k - 1, k).value == k - 1);
  CHECK(s_hk_fast(1, k).value == 0);
  CHECK(s_hk_fast(3, k).value == 0);
  CHECK(s_hk_fast(2, k).value + s_hk_fast(k, 2).value == 1);
  CHECK_THROWS_AS(s_hk_fast(1, (std::int64_t{1} << 31) + 2), std::range_error);
}

TEST_CASE("S(k) fast paths") {
  CHECK(s_k_fast(4).value == 5);
  CHECK(s_k_fast(1).value == 0);
  CHECK(s_k_fast(9).value == 8);
  CHECK(s_k_fast(10).value == 17);
  for (std::int64_t k = 1; k <= 200; ++k) REQUIRE(s_k_fast(k).value == oracle::Sk(k));
  for (std::int64_t k : {997, 1000, 2048, 3119}) {
    CHECK(s_k_fast_parallel(k, 2).value == s_k_naive(k).value);
    CHECK(s_k_fast_parallel(k, 1).value == s_k_fast(k).value);
  }
}

TEST_CASE("r(j,k)") {
  CHECK(r_jk(1, 7) == 0);
  CHECK(r_jk(3, 7) == 2);
  CHECK(r_jk(5, 7) == 2);
  for (std::int64_t k = 2; k <= 60; ++k) {
    for (std::int64_t j = 1; j < k; ++j) {
      std::int64_t count = 0;
      for (std::int64_t h = 1; h < k; ++h) count += ((h * j) / k) % 2;
      REQUIRE(r_jk(j, k) == count);
    }
  }
  CHECK_THROWS_AS(r_jk(0, 7), std::domain_error);
  CHECK_THROWS_AS(r_jk(7, 7), std::domain_error);
}

TEST_CASE("S(k) through r(j,k) for odd primes") {
  for (std::int64_t k : oracle::primes_upto(512)) {
    if (k == 2) continue;
    std::int64_t r = 0;
    for (std::int64_t j = 1; j < k; j += 2) r += r_jk(j, k);
    REQUIRE(s_k_fast(k).value == (k - 1) * (k - 1) / 2 - 2 * r);
  }
}

TEST_CASE("gcd sums, totient, a_n") {
  CHECK(gcd_sum_odd(3) == 5);
  CHECK(gcd_sum_odd(1) == 1);
  CHECK(gcd_sum_odd(9) == 21);
  CHECK_THROWS_AS(gcd_sum_odd(4), std::domain_error);
  CHECK(a_n_single(2) == 0);
  CHECK(a_n_single(1) == 1);
  CHECK(a_n_single(9) == 21);
  for (std::int64_t n = 1; n <= 400; ++n) {
    REQUIRE(totient(n) == oracle::phi(n));
    REQUIRE(static_cast<std::int64_t>(a_n_single(n)) == oracle::a(n));
    if (n % 2 == 1) {
      std::int64_t g = 0;
      for (std::int64_t h = 1; h <= 2 * n - 1; h += 2) g += std::gcd(h, n);
      REQUIRE(gcd_sum_odd(n) == g);
      REQUIRE(gcd_sum_odd(n) == oracle::a(n));
    }
  }
}

TEST_CASE("T closed forms") {
  CHECK(t_k_closed(5).value == -9);
  CHECK(t_k_closed(15).value == -61);
  CHECK(t_k_closed(10).value == -17);
  CHECK(t_k_closed(16).value == -1);
  CHECK(t_hk_closed(3, 9).value == -5);
  CHECK(t_hk_closed(2, 10).value == -3);
  CHECK(t_hk_closed(2, 5).value == 1);
  // 4 and 8 share only a factor 4; the quotients 1 and 2 differ in parity.
  CHECK(t_hk_closed(4, 8).value == 1);
  CHECK(t_hk_closed(4, 12).value == -7);
  CHECK(t_hk_closed(4, 8).method == Method::closed_form);
  for (std::int64_t k = 1; k <= 70; ++k) {
    REQUIRE(t_k_closed(k).value == oracle::Tk(k));
    for (std::int64_t h = 1; h < 2 * k; ++h) REQUIRE(t_hk_closed(h, k).value == oracle::T(h, k));
  }
}

TEST_CASE("T(2^n) = -1 and T(p) = 1 - 2p") {
  for (std::int64_t n = 0; n <= 12; ++n) CHECK(t_k_closed(std::int64_t{1} << n).value == -1);
  for (std::int64_t p : oracle::primes_upto(300)) {
    if (p > 2) CHECK(t_k_closed(p).value == 1 - 2 * p);
  }
}

TEST_CASE("primality") {
  const auto ps = oracle::primes_upto(5000);
  std::size_t idx = 0;
  for (std::int64_t n = 0; n <= 5000; ++n) {
    const bool expect = idx < ps.size() && ps[idx] == n;
    if (expect) ++idx;
    REQUIRE(is_prime(static_cast<std::uint64_t>(n)) == expect);
  }
  CHECK(is_prime(2147483647ULL));
  CHECK_FALSE(is_prime(2147483649ULL));
}
