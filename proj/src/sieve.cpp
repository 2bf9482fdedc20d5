#include "theta/sieve.hpp"

#include <limits>
#include <stdexcept>

namespace theta {

SieveTables build_sieves(std::uint64_t limit) {
  if (limit < 1) throw std::domain_error("sieve limit must be >= 1");
  if (limit >= std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::length_error("sieve limit exceeds 32-bit table range");
  }
  const auto n_max = static_cast<std::uint32_t>(limit);

  SieveTables t;
  t.limit = n_max;
  t.phi.assign(n_max + 1, 0);
  t.spf.assign(n_max + 1, 0);
  t.a.assign(n_max + 1, 0);
  t.prime_flags.assign(n_max + 1, false);
  // Largest power of spf(n) dividing n.
  std::vector<std::uint32_t> low(n_max + 1, 0);

  t.phi[1] = 1;
  t.spf[1] = 1;
  t.a[1] = 1;
  low[1] = 1;
  for (std::uint32_t i = 2; i <= n_max; ++i) {
    if (t.spf[i] == 0) {
      t.spf[i] = i;
      t.prime_flags[i] = true;
      t.primes.push_back(i);
      t.phi[i] = i - 1;
      low[i] = i;
      t.a[i] = (i == 2) ? 0 : 2 * std::uint64_t{i} - 1;
    }
    for (std::uint32_t p : t.primes) {
      if (p > t.spf[i] || std::uint64_t{i} * p > n_max) break;
      const std::uint32_t n = i * p;
      t.spf[n] = p;
      if (p == t.spf[i]) {
        low[n] = low[i] * p;
        t.phi[n] = t.phi[i] * p;
        if (low[n] == n) {
          // a(p^e) = p*a(p^(e-1)) + phi(p^e)
          t.a[n] = (p == 2) ? 0 : std::uint64_t{p} * t.a[i] + t.phi[n];
        } else {
          t.a[n] = t.a[n / low[n]] * t.a[low[n]];
        }
      } else {
        low[n] = p;
        t.phi[n] = t.phi[i] * (p - 1);
        t.a[n] = t.a[i] * t.a[p];
      }
    }
  }
  return t;
}

std::uint64_t pillai_from_spf(const SieveTables& tables, std::uint32_t n) {
  if (n < 1 || n > tables.limit) throw std::domain_error("pillai_from_spf: n outside table");
  std::uint64_t result = 1;
  while (n > 1) {
    const std::uint32_t p = tables.spf[n];
    std::uint64_t pe = 1;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      pe *= p;
      ++e;
    }
    result *= pe + e * (pe / p) * (p - 1);
  }
  return result;
}

}  // namespace theta
