#include "theta/verifier.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "theta/asymptotics.hpp"
#include "theta/exact_core.hpp"
#include "theta/fast_kernels.hpp"
#include "theta/floor_sum.hpp"
#include "theta/sieve.hpp"

namespace theta {

namespace {

using Clock = std::chrono::steady_clock;

struct Partial {
  std::uint64_t cases = 0;
  std::vector<Failure> failures;

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++cases;
    if (!ok) failures.push_back(describe());
  }
};

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

// Runs body(i, partial) for i in [first, last] across OpenMP threads and
// appends results to the report in index order.
template <typename Body>
void sweep(VerificationReport& report, std::int64_t first, std::int64_t last, Body&& body) {
  if (last < first) return;
  std::vector<Partial> parts(static_cast<std::size_t>(last - first + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = first; i <= last; ++i) {
    auto& part = parts[static_cast<std::size_t>(i - first)];
    try {
      body(i, part);
    } catch (const std::exception& e) {
      part.failures.push_back({cat("index=", i), "no exception", e.what()});
    }
  }
  for (auto& p : parts) {
    report.cases += p.cases;
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
  }
}

VerificationReport start(std::string suite, std::string range) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.range = std::move(range);
  return r;
}

void finish(VerificationReport& r, Clock::time_point t0) { r.elapsed = Clock::now() - t0; }

std::string i128s(i128 v) { return to_string(v); }

}  // namespace

void VerificationReport::merge(VerificationReport other) {
  if (suite.empty()) {
    suite = std::move(other.suite);
    range = std::move(other.range);
  } else {
    suite += "+" + other.suite;
    range += ";" + other.range;
  }
  cases += other.cases;
  for (auto& f : other.failures) failures.push_back(std::move(f));
  elapsed += other.elapsed;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["range"] = report.range;
  j["cases"] = report.cases;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  }
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = std::llround(report.elapsed.count());
  return j.dump();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << (report.passed() ? "PASS " : "FAIL ") << report.suite << " [" << report.range
     << "] cases=" << report.cases << " failures=" << report.failures.size()
     << " elapsed_ms=" << std::llround(report.elapsed.count()) << '\n';
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < report.failures.size() && i < kShown; ++i) {
    const auto& f = report.failures[i];
    os << "  " << f.inputs << ": expected " << f.expected << ", got " << f.actual << '\n';
  }
  if (report.failures.size() > kShown) {
    os << "  ... " << report.failures.size() - kShown << " more\n";
  }
  return os.str();
}

VerificationReport verify_reciprocity_theta(std::int64_t limit) {
  if (limit < 2) throw std::domain_error("verify_reciprocity_theta requires limit >= 2");
  const auto t0 = Clock::now();
  auto report = start("reciprocity-theta", cat("1<=c<d<=", limit));
  sweep(report, 1, limit, [&](std::int64_t c, Partial& part) {
    for (std::int64_t d = c + 1; d <= limit; ++d) {
      if ((c + d) % 2 == 0 || std::gcd(c, d) != 1) continue;
      const auto sum = s_hk_naive(d, c).value + s_hk_naive(c, d).value;
      part.check(sum == 1, [&] { return Failure{cat("S(", d, ",", c, ")+S(", c, ",", d, ")"), "1", cat(sum)}; });
    }
  });
  finish(report, t0);
  return report;
}

VerificationReport verify_reciprocity_dedekind(std::int64_t limit) {
  if (limit < 1) throw std::domain_error("verify_reciprocity_dedekind requires limit >= 1");
  const auto t0 = Clock::now();
  auto report = start("reciprocity-dedekind", cat("1<=c<=d<=", limit));
  sweep(report, 1, limit, [&](std::int64_t c, Partial& part) {
    for (std::int64_t d = c; d <= limit; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const Rational lhs = dedekind_s(c, d) + dedekind_s(d, c);
      const Rational rhs =
          Rational(-1, 4) + Rational(1, 12) * (Rational(c, d) + Rational(1, c * d) + Rational(d, c));
      part.check(lhs == rhs, [&] { return Failure{cat("s(", c, ",", d, ")+s(", d, ",", c, ")"), rhs.str(), lhs.str()}; });
    }
  });
  finish(report, t0);
  return report;
}

VerificationReport verify_elementary(std::int64_t limit) {
  if (limit < 2) throw std::domain_error("verify_elementary requires limit >= 2");
  const auto t0 = Clock::now();
  auto report = start("elementary", cat("k<=", limit));

  sweep(report, 1, limit, [&](std::int64_t k, Partial& part) {
    const std::int64_t sk = s_k_fast(k).value;
    // S(k) and k have opposite parity.
    part.check((sk + k) % 2 != 0, [&] { return Failure{cat("parity S(", k, ")"), "opposite to k", cat(sk)}; });

    if (k >= 2) {
      const auto top = s_hk_naive(k - 1, k).value;
      part.check(top == k - 1, [&] { return Failure{cat("S(", k - 1, ",", k, ")"), cat(k - 1), cat(top)}; });
    }

    for (std::int64_t h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      const auto s = s_hk_naive(h, k).value;
      const auto t = t_hk_naive(h, k).value;
      if (h % 2 == 1 && k % 2 == 1) {
        part.check(s == 0, [&] { return Failure{cat("S(", h, ",", k, ") odd coprime"), "0", cat(s)}; });
      }
      const std::int64_t sign = ((k + h) % 2 == 0) ? 1 : -1;
      const std::int64_t related = (1 + sign) * s - sign;
      part.check(t == related, [&] { return Failure{cat("T(", h, ",", k, ") from S"), cat(related), cat(t)}; });
      if ((h + k) % 2 == 1) {
        part.check(t == 1, [&] { return Failure{cat("T(", h, ",", k, ") opposite parity"), "1", cat(t)}; });
      }
      // S(qh, qk) for every multiple still inside the range.
      for (std::int64_t q = 1; q * k <= limit; ++q) {
        const auto scaled = s_hk_naive(q * h, q * k).value;
        std::int64_t expected;
        if ((h + k) % 2 == 1) {
          expected = (q % 2 == 1) ? s : 1;
        } else {
          expected = -(q - 1);
        }
        part.check(scaled == expected, [&] {
          return Failure{cat("S(", q, "*", h, ",", q, "*", k, ")"), cat(expected), cat(scaled)};
        });
      }
    }

    if (is_prime(static_cast<std::uint64_t>(k))) {
      if (sk > 0 && is_prime(static_cast<std::uint64_t>(sk))) {
        part.check(k == 3 && sk == 2, [&] { return Failure{cat("k,S(k) both prime at k=", k), "(3,2)", cat("(", k, ",", sk, ")")}; });
      } else {
        ++part.cases;
      }
      if (k % 2 == 1) {
        const std::int64_t expected = (k % 4 == 1) ? 0 : 2;
        const std::int64_t residue = floormod<std::int64_t>(sk, 4);
        part.check(residue == expected, [&] { return Failure{cat("S(", k, ") mod 4"), cat(expected), cat(residue)}; });
        const auto tp = t_k_naive(k).value;
        part.check(tp == 1 - 2 * k, [&] { return Failure{cat("T(", k, ") prime"), cat(1 - 2 * k), cat(tp)}; });
      }
    }
  });

  // T(pq) for distinct odd primes and T(2^n).
  std::vector<std::int64_t> odd_primes;
  for (std::int64_t p = 3; p * 3 <= limit; p += 2) {
    if (is_prime(static_cast<std::uint64_t>(p))) odd_primes.push_back(p);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> pq;
  for (std::size_t i = 0; i < odd_primes.size(); ++i) {
    for (std::size_t j = i + 1; j < odd_primes.size() && odd_primes[i] * odd_primes[j] <= limit; ++j) {
      pq.emplace_back(odd_primes[i], odd_primes[j]);
    }
  }
  sweep(report, 0, static_cast<std::int64_t>(pq.size()) - 1, [&](std::int64_t i, Partial& part) {
    const auto [p, q] = pq[static_cast<std::size_t>(i)];
    const auto t = t_k_naive(p * q).value;
    const auto expected = 4 * (p + q) - 6 * p * q - 3;
    part.check(t == expected, [&] { return Failure{cat("T(", p, "*", q, ")"), cat(expected), cat(t)}; });
  });
  sweep(report, 1, 62, [&](std::int64_t n, Partial& part) {
    const std::int64_t k = std::int64_t{1} << n;
    if (k > limit) return;
    const auto t = t_k_naive(k).value;
    part.check(t == -1, [&] { return Failure{cat("T(2^", n, ")"), "-1", cat(t)}; });
  });

  finish(report, t0);
  return report;
}

std::int64_t m_jk(std::int64_t j, std::int64_t k) {
  if (k < 3 || k % 2 == 0) throw std::domain_error("m_jk requires odd k >= 3");
  if (j < 1 || j > k - 1) throw std::domain_error("m_jk requires 1 <= j <= k-1");
  std::int64_t count = 0;
  for (std::int64_t h = 1; h <= (k - 1) / 2; ++h) {
    const std::int64_t fl = j + (2 * h * j) / k;  // [(2h+k)j/k]
    count += fl & 1;
  }
  return count;
}

std::int64_t f_scaled(std::int64_t l, std::int64_t h, std::int64_t k) {
  return 2 * floormod<std::int64_t>(2 * h * l, k) + floormod<std::int64_t>(2 * h * (2 * l - 1) - k, 2 * k);
}

Rational g_pair(std::int64_t m, std::int64_t h, std::int64_t k) {
  const std::int64_t partner = (k - 1) / 2 - m + 1;
  return Rational(f_scaled(m, h, k) + f_scaled(partner, h, k), 2 * k);
}

std::string_view pair_case_name(PairCase c) {
  switch (c) {
    case PairCase::A1: return "A1";
    case PairCase::A2: return "A2";
    case PairCase::A3: return "A3";
    case PairCase::B: return "B";
  }
  return "?";
}

PairCase classify_pair(std::int64_t m, std::int64_t h, std::int64_t k) {
  // Fractional parts as numerators over k; k odd rules out ties with 1/2.
  const std::int64_t frac_h = floormod(h, k);
  const std::int64_t frac_2mh = floormod<std::int64_t>(2 * m * h, k);
  if (frac_h > frac_2mh) return PairCase::B;
  if (2 * (frac_2mh - frac_h) >= k) return PairCase::A1;
  if (2 * frac_2mh > k) return PairCase::A2;
  return PairCase::A3;
}

BoundWitness bound_witness(std::int64_t j, std::int64_t k) {
  BoundWitness w;
  w.k = k;
  w.j = j;
  w.r = r_jk(j, k);
  w.m = m_jk(j, k);
  w.eps = Rational(w.r, k) - Rational(j - 1, 2 * j);
  return w;
}

VerificationReport verify_fractional_parts(std::int64_t prime_limit) {
  if (prime_limit < 3) throw std::domain_error("verify_fractional_parts requires prime_limit >= 3");
  const auto t0 = Clock::now();
  auto report = start("theorem-fractional-parts", cat("odd primes k<=", prime_limit));
  sweep(report, 3, prime_limit, [&](std::int64_t k, Partial& part) {
    if (k % 2 == 0 || !is_prime(static_cast<std::uint64_t>(k))) return;
    const std::int64_t half = (k - 1) / 2;
    i128 frac_sum = 0;   // sum of fractional parts, scaled by 2k
    i128 floor_sum_ = 0;  // sum of the matching greatest-integer terms
    for (std::int64_t l = 1; l <= half; ++l) {
      for (std::int64_t h = 1; h <= half; ++h) {
        const std::int64_t shifted = 2 * h * (2 * l - 1) - k;
        frac_sum += 2 * ((2 * h * l) % k) + floormod(shifted, 2 * k);
        floor_sum_ += (2 * h * l) / k + floordiv(shifted, 2 * k);
      }
    }
    const i128 sk = s_k_fast(k).value;
    const i128 km1 = k - 1;

    part.check((2 * frac_sum) % k == 0 && -km1 * km1 + 2 * frac_sum / k == sk, [&] {
      return Failure{cat("fractional-part sum k=", k), i128s(sk),
                     cat(i128s(-km1 * km1 * k + 2 * frac_sum), "/", k)};
    });
    part.check(16 * k * floor_sum_ == k * km1 * km1 * km1 - 8 * frac_sum, [&] {
      return Failure{cat("floor/fraction identity k=", k), i128s(k * km1 * km1 * km1 - 8 * frac_sum),
                     i128s(16 * k * floor_sum_)};
    });
    i128 m_total = 0;
    for (std::int64_t j = 1; j < k; ++j) m_total += m_jk(j, k);
    part.check(8 * m_total == km1 * km1 * (k - 3) - 16 * floor_sum_, [&] {
      return Failure{cat("sum m(j,k) k=", k), i128s(km1 * km1 * (k - 3) - 16 * floor_sum_), i128s(8 * m_total)};
    });
    part.check(2 * sk == 4 * m_total - km1 * km1, [&] {
      return Failure{cat("S(k) from m(j,k) k=", k), i128s(2 * sk), i128s(4 * m_total - km1 * km1)};
    });
  });
  finish(report, t0);
  return report;
}

VerificationReport verify_pairing(std::int64_t prime_limit) {
  if (prime_limit < 7) throw std::domain_error("verify_pairing requires prime_limit >= 7");
  const auto t0 = Clock::now();
  auto report = start("pairing-cases", cat("odd primes k<=", prime_limit));
  sweep(report, 3, prime_limit, [&](std::int64_t k, Partial& part) {
    if (k % 2 == 0 || !is_prime(static_cast<std::uint64_t>(k))) return;
    const std::int64_t half = (k - 1) / 2;

    // Columns l = m and l = half - m + 1 pair up for m < (k+1)/4.
    std::vector<int> cover(static_cast<std::size_t>(half + 1), 0);
    for (std::int64_t m = 1; 4 * m < k + 1; ++m) {
      ++cover[static_cast<std::size_t>(m)];
      ++cover[static_cast<std::size_t>(half - m + 1)];
    }
    std::int64_t unpaired = 0, doubled = 0, unpaired_col = 0;
    for (std::int64_t l = 1; l <= half; ++l) {
      if (cover[static_cast<std::size_t>(l)] == 0) {
        ++unpaired;
        unpaired_col = l;
      }
      if (cover[static_cast<std::size_t>(l)] > 1) ++doubled;
    }
    const std::int64_t want_unpaired = (k % 4 == 3) ? 1 : 0;
    part.check(unpaired == want_unpaired && doubled == 0, [&] {
      return Failure{cat("column pairing k=", k), cat(want_unpaired, " unpaired"), cat(unpaired, " unpaired, ", doubled, " doubled")};
    });
    if (k % 4 == 3) {
      part.check(unpaired_col == (k + 1) / 4, [&] { return Failure{cat("unpaired column k=", k), cat((k + 1) / 4), cat(unpaired_col)}; });
    }

    for (std::int64_t h = 1; h <= half; ++h) {
      for (std::int64_t m = 1; 4 * m < k + 1; ++m) {
        const Rational g = g_pair(m, h, k);
        const PairCase c = classify_pair(m, h, k);
        const i128 expected = (c == PairCase::A2) ? 3 : (c == PairCase::B) ? 1 : 2;
        part.check(g.is_integer() && g.numerator() == expected, [&] {
          return Failure{cat("g(", m, ",", h, ") k=", k, " case ", pair_case_name(c)), i128s(expected), g.str()};
        });
      }
      if (k % 4 == 3) {
        // f((k+1)/4, h) = 2{h/2} + 1/2, i.e. k*(2*(h mod 2) + 1) over 2k.
        const std::int64_t f = f_scaled((k + 1) / 4, h, k);
        const std::int64_t expected = k * (2 * (h % 2) + 1);
        part.check(f == expected, [&] {
          return Failure{cat("unpaired f((k+1)/4,", h, ") k=", k), Rational(expected, 2 * k).str(), Rational(f, 2 * k).str()};
        });
      }
    }
  });
  finish(report, t0);
  return report;
}

BigRational odd_harmonic(std::int64_t k) {
  BigRational h = 0;
  for (std::int64_t j = 1; j <= k - 1; j += 2) h += BigRational(1, j);
  return h;
}

VerificationReport verify_lower_bounds(std::int64_t prime_limit) {
  if (prime_limit < 3) throw std::domain_error("verify_lower_bounds requires prime_limit >= 3");
  const auto t0 = Clock::now();
  auto report = start("lower-bounds", cat("odd primes k<=", prime_limit));
  const double gamma = compute_constants().gamma;

  // H(k) for every odd prime, built incrementally in ascending order.
  std::vector<std::int64_t> primes;
  std::vector<BigRational> harmonic;
  {
    BigRational h = 0;
    std::int64_t next_j = 1;
    for (std::int64_t k = 3; k <= prime_limit; k += 2) {
      if (!is_prime(static_cast<std::uint64_t>(k))) continue;
      for (; next_j <= k - 1; next_j += 2) h += BigRational(1, next_j);
      primes.push_back(k);
      harmonic.push_back(h);
    }
  }

  sweep(report, 0, static_cast<std::int64_t>(primes.size()) - 1, [&](std::int64_t i, Partial& part) {
    const std::int64_t k = primes[static_cast<std::size_t>(i)];
    const BigRational& h = harmonic[static_cast<std::size_t>(i)];
    const std::int64_t sk = s_k_fast(k).value;

    // 4S + 2(k-1) + (k-1)(k+1) >= 4kH  <=>  S >= -(k-1)/2 + kH - (k-1)(k+1)/4
    const BigRational lhs = BigRational(4 * sk + 2 * (k - 1) + (k - 1) * (k + 1));
    const BigRational rhs = 4 * k * h;
    part.check(lhs >= rhs, [&] {
      return Failure{cat("harmonic lower bound k=", k), cat(">= ", static_cast<double>(rhs / 4)), cat(sk)};
    });

    std::int64_t r_total = 0;
    for (std::int64_t j = 1; j < k; j += 2) {
      const std::int64_t r = r_jk(j, k);
      r_total += r;
      // r <= k/2 - k/(2j) + (j-1)/2, times 2j
      part.check(2 * j * r <= j * k - k + j * (j - 1), [&] {
        return Failure{cat("r(", j, ",", k, ") bound"), cat("<= ", Rational(j * k - k + j * (j - 1), 2 * j).str()), cat(r)};
      });
    }
    const std::int64_t via_r = (k - 1) * (k - 1) / 2 - 2 * r_total;
    part.check(via_r == sk, [&] { return Failure{cat("S(k) via r(j,k) k=", k), cat(sk), cat(via_r)}; });

    if (k >= 10) {
      const double hk = h.convert_to<double>();
      const double dev = std::fabs(hk - 0.5 * std::log(2.0 * static_cast<double>(k)) - gamma / 2);
      part.check(dev <= 1.0 / static_cast<double>(k), [&] {
        return Failure{cat("|H(k) - log(2k)/2 - gamma/2| k=", k), cat("<= ", 1.0 / static_cast<double>(k)), cat(dev)};
      });
    }
  });

  sweep(report, 1, prime_limit, [&](std::int64_t k, Partial& part) {
    const std::int64_t sk = s_k_fast(k).value;
    // The half bound is argued for odd k. Among even k it fails only at
    // k = 2 (S = 1) and k = 4 (S = 5), which still meet |S| <= (k-1)^2.
    const std::int64_t bound = (k - 1) * (k - 1);
    const std::int64_t twice = (k == 2 || k == 4) ? 2 * bound : bound;
    part.check(2 * sk <= twice && -2 * sk <= twice, [&] {
      return Failure{cat("trivial bound k=", k), cat("|S| <= ", Rational(twice, 2).str()), cat(sk)};
    });
  });

  finish(report, t0);
  return report;
}

VerificationReport verify_fast_equivalence(const EquivalenceLimits& limits) {
  const auto t0 = Clock::now();
  auto report = start("fast-equivalence",
                      cat("pairs<=", limits.pairs, ",sums<=", limits.sums, ",t_pairs<=", limits.t_pairs,
                          ",random=", limits.random_pairs, "@", limits.random_k_max,
                          ",floor_sum=", limits.floor_sum_tuples));

  sweep(report, 1, limits.pairs, [&](std::int64_t k, Partial& part) {
    for (std::int64_t h = 1; h <= k; ++h) {
      const auto fast = s_hk_fast(h, k).value;
      const auto naive = s_hk_naive(h, k).value;
      part.check(fast == naive, [&] { return Failure{cat("S(", h, ",", k, ")"), cat(naive), cat(fast)}; });
    }
  });

  sweep(report, 1, limits.sums, [&](std::int64_t k, Partial& part) {
    const auto fast = s_k_fast(k).value;
    const auto naive = s_k_naive(k).value;
    part.check(fast == naive, [&] { return Failure{cat("S(", k, ")"), cat(naive), cat(fast)}; });
    const auto closed = t_k_closed(k).value;
    const auto t_naive = t_k_naive(k).value;
    part.check(closed == t_naive, [&] { return Failure{cat("T(", k, ")"), cat(t_naive), cat(closed)}; });
  });

  sweep(report, 1, limits.t_pairs, [&](std::int64_t k, Partial& part) {
    for (std::int64_t h = 1; h <= 2 * k - 1; ++h) {
      const auto closed = t_hk_closed(h, k).value;
      const auto naive = t_hk_naive(h, k).value;
      part.check(closed == naive, [&] { return Failure{cat("T(", h, ",", k, ")"), cat(naive), cat(closed)}; });
    }
  });

  std::mt19937_64 rng(limits.seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t i = 0; i < limits.random_pairs; ++i) {
    const auto k = std::uniform_int_distribution<std::int64_t>(1, limits.random_k_max)(rng);
    const auto h = std::uniform_int_distribution<std::int64_t>(1, 2 * k)(rng);
    pairs.emplace_back(h, k);
  }
  sweep(report, 0, limits.random_pairs - 1, [&](std::int64_t i, Partial& part) {
    const auto [h, k] = pairs[static_cast<std::size_t>(i)];
    const auto fast = s_hk_fast(h, k).value;
    const auto naive = s_hk_naive(h, k).value;
    part.check(fast == naive, [&] { return Failure{cat("S(", h, ",", k, ") random"), cat(naive), cat(fast)}; });
  });

  std::vector<FloorSumArgs> tuples;
  for (std::int64_t i = 0; i < limits.floor_sum_tuples; ++i) {
    FloorSumArgs t;
    t.n = std::uniform_int_distribution<std::int64_t>(0, 1000)(rng);
    t.m = std::uniform_int_distribution<std::int64_t>(1, 1000)(rng);
    t.a = std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng);
    t.b = std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng);
    tuples.push_back(t);
  }
  constexpr std::int64_t kBlock = 1000;
  const std::int64_t blocks = (limits.floor_sum_tuples + kBlock - 1) / kBlock;
  sweep(report, 0, blocks - 1, [&](std::int64_t block, Partial& part) {
    const std::int64_t end = std::min(limits.floor_sum_tuples, (block + 1) * kBlock);
    for (std::int64_t i = block * kBlock; i < end; ++i) {
      const auto& t = tuples[static_cast<std::size_t>(i)];
      i128 brute = 0;
      for (std::int64_t x = 0; x < t.n; ++x) brute += floordiv(t.a * x + t.b, t.m);
      const i128 fast = floor_sum(t);
      part.check(fast == brute, [&] {
        return Failure{cat("floor_sum(n=", t.n, ",m=", t.m, ",a=", t.a, ",b=", t.b, ")"), i128s(brute), i128s(fast)};
      });
    }
  });

  finish(report, t0);
  return report;
}

VerificationReport verify_fast_equivalence(std::int64_t limit_pairs, std::int64_t limit_k) {
  EquivalenceLimits limits;
  limits.pairs = limit_pairs;
  limits.sums = limit_k;
  limits.t_pairs = std::min<std::int64_t>(limit_k, 128);
  return verify_fast_equivalence(limits);
}

std::vector<VerificationReport> verify_all(std::int64_t limit) {
  std::vector<VerificationReport> out;
  out.push_back(verify_reciprocity_theta(std::max<std::int64_t>(limit, 2)));
  out.push_back(verify_reciprocity_dedekind(limit));
  out.push_back(verify_elementary(std::max<std::int64_t>(limit, 2)));
  out.push_back(verify_fractional_parts(std::max<std::int64_t>(limit, 3)));
  out.push_back(verify_pairing(std::max<std::int64_t>(limit, 7)));
  out.push_back(verify_lower_bounds(std::max<std::int64_t>(limit, 3)));
  out.push_back(verify_fast_equivalence(std::min<std::int64_t>(limit, 512), std::min<std::int64_t>(limit, 512)));
  return out;
}

}  // namespace theta
