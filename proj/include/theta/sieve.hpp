#pragma once

#include <cstdint>
#include <vector>

namespace theta {

/// Arithmetic tables for 1..limit, indexed directly by n (slot 0 unused).
/// Immutable after build_sieves; safe to share read-only across threads.
struct SieveTables {
  std::uint32_t limit = 0;
  std::vector<std::uint32_t> phi;
  std::vector<std::uint32_t> spf;  // smallest prime factor, spf[1] = 1
  std::vector<std::uint64_t> a;    // a_n, zero for even n
  std::vector<bool> prime_flags;
  std::vector<std::uint32_t> primes;

  bool is_prime(std::uint64_t n) const { return n <= limit && prime_flags[n]; }
};

/// Linear sieve. a_n is filled multiplicatively with
/// a(p^e) = p^e + e*p^(e-1)*(p-1) for odd p and a(2^e) = 0.
/// Throws std::domain_error for limit < 1 and std::length_error when limit
/// exceeds the 32-bit table range.
SieveTables build_sieves(std::uint64_t limit);

/// sum_{d|n} d*phi(n/d) over all n (not just odd), from the spf table.
std::uint64_t pillai_from_spf(const SieveTables& tables, std::uint32_t n);

}  // namespace theta
