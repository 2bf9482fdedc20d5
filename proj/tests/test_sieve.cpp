#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "theta/fast_kernels.hpp"
#include "theta/sieve.hpp"

using namespace theta;

TEST_CASE("sieve tables to 10") {
  const auto t = build_sieves(10);
  const std::uint64_t a[] = {1, 0, 5, 0, 9, 0, 13, 0, 21, 0};
  const std::uint32_t phi[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
  for (int n = 1; n <= 10; ++n) {
    CHECK(t.a[n] == a[n - 1]);
    CHECK(t.phi[n] == phi[n - 1]);
  }
  CHECK(t.primes == std::vector<std::uint32_t>{2, 3, 5, 7});
}

TEST_CASE("sieve against per-n oracles") {
  const auto t = build_sieves(10000);
  CHECK(t.primes.size() == 1229);
  CHECK(t.primes.size() == oracle::primes_upto(10000).size());
  for (std::int64_t n = 1; n <= 10000; ++n) {
    REQUIRE(t.a[static_cast<std::size_t>(n)] == a_n_single(n));
    REQUIRE(t.is_prime(static_cast<std::uint64_t>(n)) == is_prime(static_cast<std::uint64_t>(n)));
  }
  for (std::int64_t n = 1; n <= 600; ++n) {
    REQUIRE(static_cast<std::int64_t>(t.phi[static_cast<std::size_t>(n)]) == oracle::phi(n));
    std::int64_t pillai = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) pillai += d * oracle::phi(n / d);
    }
    REQUIRE(static_cast<std::int64_t>(pillai_from_spf(t, static_cast<std::uint32_t>(n))) == pillai);
  }
}

TEST_CASE("sieve limits") {
  CHECK_THROWS_AS(build_sieves(0), std::domain_error);
  CHECK_THROWS_AS(build_sieves(std::uint64_t{1} << 33), std::length_error);
  const auto one = build_sieves(1);
  CHECK(one.a[1] == 1);
  CHECK(one.primes.empty());
  CHECK_FALSE(one.is_prime(2));
}
