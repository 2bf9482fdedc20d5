#include "theta/floor_sum.hpp"

#include <stdexcept>
#include <utility>

namespace theta {

namespace {

// Euclid-like reduction for 0 <= a, b < m. Word must hold m*(n+1).
template <typename Word>
u128 floor_sum_reduced(Word n, Word m, Word a, Word b) {
  u128 ans = 0;
  while (true) {
    if (a >= m) {
      ans += static_cast<u128>(n) * (n - 1) / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += static_cast<u128>(n) * (b / m);
      b %= m;
    }
    Word y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = y_max % m;
    std::swap(m, a);
  }
  return ans;
}

}  // namespace

i128 floor_sum(const FloorSumArgs& args) {
  auto [n, m, a, b] = args;
  if (m < 1) throw std::domain_error("floor_sum: modulus must be >= 1");
  if (n < 0) throw std::domain_error("floor_sum: term count must be >= 0");
  if (n == 0) return 0;

  // Shift a and b into [0, m) and add the removed linear part analytically.
  i128 correction = 0;
  std::int64_t qa = floordiv(a, m);
  std::int64_t qb = floordiv(b, m);
  if (qa != 0) {
    i128 pairs = static_cast<i128>(n) * (n - 1) / 2;
    correction = checked_add(correction, checked_mul(pairs, qa));
  }
  if (qb != 0) correction = checked_add(correction, checked_mul(static_cast<i128>(n), qb));
  auto ra = static_cast<std::uint64_t>(floormod(a, m));
  auto rb = static_cast<std::uint64_t>(floormod(b, m));
  auto un = static_cast<std::uint64_t>(n);
  auto um = static_cast<std::uint64_t>(m);

  constexpr std::uint64_t kNarrow = std::uint64_t{1} << 32;
  u128 reduced = (un < kNarrow && um < kNarrow)
                     ? floor_sum_reduced<std::uint64_t>(un, um, ra, rb)
                     : floor_sum_reduced<u128>(un, um, ra, rb);
  // The reduced sum is < n*(n+1) < 2^127.
  return checked_add(correction, static_cast<i128>(reduced));
}

}  // namespace theta
