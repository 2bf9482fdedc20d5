#pragma once

// Values as printed in the source tables and text, kept verbatim so the
// toolkit can diff its own recomputation against them.

#include <array>
#include <cstdint>
#include <utility>

namespace theta::published {

// S(k), k = 1..20. Entries from k = 9 on have the same parity as k.
inline constexpr std::array<std::int64_t, 20> kTableS = {
    0, 1, 2, 5, 4, 7, 10, 11, 11, 8, 17, 14, 21, 20, 15, 18, 39, 24, 21, 38};

// T(k), k = 1..20.
inline constexpr std::array<std::int64_t, 20> kTableT = {
    -1, -1, -5, -1, -9, -9, -13, -1, -25, -17, -21, -17, -25, -25, -61, -1, -33, -49, -37, -33};

// Primes below 10^4 with S(k) < 2k.
inline constexpr std::array<std::int64_t, 17> kBelowTwoK = {
    2, 3, 5, 7, 11, 13, 17, 23, 29, 41, 53, 59, 83, 113, 149, 179, 233};

// Primes below 10^4 with S(k) not exceeding 3k.
inline constexpr std::array<std::int64_t, 87> kBelowThreeK = {
    2,    3,    5,    7,    11,   13,   17,   19,   23,   29,   31,   37,   41,   43,   47,
    53,   59,   61,   67,   71,   73,   79,   83,   89,   97,   101,  103,  107,  109,  113,
    131,  137,  139,  149,  163,  167,  173,  179,  193,  197,  233,  239,  251,  257,  263,
    269,  293,  317,  347,  349,  359,  383,  389,  419,  439,  443,  449,  479,  503,  509,
    557,  563,  569,  593,  599,  683,  719,  743,  797,  809,  827,  839,  863,  1013, 1019,
    1049, 1103, 1229, 1259, 1409, 1733, 1889, 1913, 2339, 2459, 2969, 3119};

// (k, S(k)) for primes k <= 50000 with S(k) not exceeding 4k.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 8> kBelowFourK = {{
    {32603, 126466},
    {33149, 126068},
    {34649, 134104},
    {34913, 137712},
    {35573, 137420},
    {41579, 165026},
    {44909, 175916},
    {49139, 189522},
}};

inline constexpr std::int64_t kTableLimit = 10000;
inline constexpr std::int64_t kFourKLimit = 50000;

// Negative S(k) for k <= 10^4, split by divisibility by 3 and 5.
struct NegativeCounts {
  std::int64_t total;
  std::int64_t div3_not5;
  std::int64_t div5_not3;
  std::int64_t div15;
};
inline constexpr NegativeCounts kNegativeCounts = {151, 39, 8, 104};

// Individually quoted values of S(k).
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 12> kSpotValues = {{
    {945, -296},
    {2079, -1390},
    {3465, -7800},
    {5005, -1332},
    {8855, -7950},
    {9933, -448},
    {9975, -22450},
    {10395, -40726},
    {17017, -2364},
    {19019, -20578},
    {3, 2},
    {5, 4},
}};

}  // namespace theta::published
