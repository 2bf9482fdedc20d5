#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "theta/rational.hpp"

namespace theta {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string suite;
  std::string range;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool passed() const { return failures.empty(); }
  /// Appends `other`'s cases, failures and elapsed time. Associative.
  void merge(VerificationReport other);
};

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// S(d,c) + S(c,d) = 1 over coprime opposite-parity pairs 1 <= c,d <= limit.
VerificationReport verify_reciprocity_theta(std::int64_t limit);

/// Exact s(c,d) + s(d,c) = -1/4 + (c/d + 1/(cd) + d/c)/12 over coprime pairs.
VerificationReport verify_reciprocity_dedekind(std::int64_t limit);

/// Elementary identities up to `limit`: parity of S(k), S(k-1,k) = k-1,
/// vanishing for odd coprime pairs, the S/T relation, T = 1 for coprime
/// opposite parity, S(qh,qk) against S(h,k), the (3,2) case, S(k) mod 4 for
/// primes, and T(p), T(pq), T(2^n).
VerificationReport verify_elementary(std::int64_t limit);

/// For each odd prime k <= prime_limit, the fractional-part double sum and the
/// m(j,k) chain reproduce S(k) exactly. Throws std::domain_error if
/// prime_limit < 3.
VerificationReport verify_fractional_parts(std::int64_t prime_limit);

/// Case analysis for the paired terms g(m,h) and the unpaired column for
/// k = 3 mod 4. Throws std::domain_error if prime_limit < 7.
VerificationReport verify_pairing(std::int64_t prime_limit);

/// Lower bound via the odd harmonic sum H(k), the r(j,k) bound, the S(k)
/// expression through r(j,k), the trivial bounds, and the asymptotic for H(k).
VerificationReport verify_lower_bounds(std::int64_t prime_limit);

struct EquivalenceLimits {
  std::int64_t pairs = 512;           // exhaustive s_hk_fast vs naive, 1 <= h <= k <= pairs
  std::int64_t sums = 512;            // s_k_fast and t_k_closed vs naive, k <= sums
  std::int64_t t_pairs = 128;         // t_hk_closed vs naive, k <= t_pairs, h < 2k
  std::int64_t random_pairs = 1000;   // random (h,k) with k <= random_k_max
  std::int64_t random_k_max = 1000000;
  std::int64_t floor_sum_tuples = 100000;
  std::uint64_t seed = 0x5eed5eedULL;
};

VerificationReport verify_fast_equivalence(const EquivalenceLimits& limits);
VerificationReport verify_fast_equivalence(std::int64_t limit_pairs, std::int64_t limit_k);

/// Every suite above with ranges derived from `limit`, in a fixed order.
std::vector<VerificationReport> verify_all(std::int64_t limit);

// Exact quantities the suites are built from.

using BigRational = boost::multiprecision::cpp_rational;

/// H(k) = sum of 1/j over odd j in [1, k-1].
BigRational odd_harmonic(std::int64_t k);

/// m(j,k) = #{1 <= h <= (k-1)/2 : [(2h+k)j/k] odd}, by direct count.
std::int64_t m_jk(std::int64_t j, std::int64_t k);

/// Sub-case labels for the column pairing.
enum class PairCase { A1, A2, A3, B };

std::string_view pair_case_name(PairCase c);

/// Quantities around r(j,k), the pairing f/g, and the error term eps_j(k),
/// all for one odd modulus k.
struct BoundWitness {
  std::int64_t k = 0;
  std::int64_t j = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;
  Rational eps;  // r(j,k)/k - (j-1)/(2j)
};

BoundWitness bound_witness(std::int64_t j, std::int64_t k);

/// f(l,h) = {2hl/k} + {h(2l-1)/k - 1/2}, returned as an integer over 2k.
std::int64_t f_scaled(std::int64_t l, std::int64_t h, std::int64_t k);

/// g(m,h) = f(m,h) + f((k-1)/2 - m + 1, h) as an exact rational.
Rational g_pair(std::int64_t m, std::int64_t h, std::int64_t k);

/// Sub-case that applies to (m,h) for modulus k (1 <= h <= (k-1)/2).
PairCase classify_pair(std::int64_t m, std::int64_t h, std::int64_t k);

}  // namespace theta
