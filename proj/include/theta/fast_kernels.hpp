#pragma once

#include <cstdint>

#include "theta/exact_core.hpp"

namespace theta {

/// S(h,k) in O(log(h+k)): the alternating sum splits into even and odd j
/// progressions, and the parity of [x] is [x] - 2[x/2], so each progression
/// costs two floor_sum calls.
SumValue s_hk_fast(std::int64_t h, std::int64_t k);

/// S(k) = sum_h S(h,k) with s_hk_fast per term. O(k log k), valid for all k.
SumValue s_k_fast(std::int64_t k);

/// Same value as s_k_fast with the h-loop split across OpenMP threads.
SumValue s_k_fast_parallel(std::int64_t k, int threads = 0);

/// r(j,k) = #{1 <= h <= k-1 : [hj/k] odd}. For gcd(j,k) = 1 uses
/// (j-1)(k-1)/2 - 2*sum_h [hj/2k]; otherwise both floor sums go through the
/// kernel. Throws std::domain_error unless 1 <= j <= k-1.
std::int64_t r_jk(std::int64_t j, std::int64_t k);

/// sum of gcd(k,h) over odd h in [1, 2k-1]. k must be odd.
std::int64_t gcd_sum_odd(std::int64_t k);

/// Euler's totient by trial division.
std::int64_t totient(std::int64_t n);

/// a_n: sum_{d|n} d*phi(n/d) for odd n, 0 for even n (divisor enumeration).
std::uint64_t a_n_single(std::int64_t n);

/// T(k) from the gcd/totient identities: 2k-1-2*a_k for odd k,
/// 2k-1-2*sum_{h=2 mod 4} gcd(h,k) for even k.
SumValue t_k_closed(std::int64_t k);

/// T(h,k) = 1 - 2*gcd(h,k) when h/g and k/g are both odd, otherwise 1.
SumValue t_hk_closed(std::int64_t h, std::int64_t k);

/// Deterministic primality for 64-bit values (trial division by 6k+-1).
bool is_prime(std::uint64_t n);

}  // namespace theta
