#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace theta {

struct BenchTiming {
  std::string method;  // "naive" or "fast"
  std::int64_t k = 0;
  double seconds = 0;  // one evaluation of S(k)
  int repeats = 0;
};

struct BenchReport {
  std::int64_t limit = 0;
  std::vector<BenchTiming> timings;
  std::optional<double> fast_exponent;
  std::optional<double> naive_exponent;
  std::int64_t compared = 0;
  std::int64_t mismatches = 0;

  // Growth of the fast path stays below 1.5 and naive agrees with fast.
  bool passed() const { return fast_exponent && *fast_exponent < 1.5 && mismatches == 0; }
  bool naive_quadratic() const { return naive_exponent && *naive_exponent >= 1.7 && *naive_exponent <= 2.3; }
};

/// Times naive and fast S(k) on primes spread over [limit/16, limit]; the
/// naive sample is capped at k <= 4000 to keep the run short. Throws
/// std::domain_error for limit < 100.
BenchReport run_bench(std::int64_t limit);

std::string bench_text(const BenchReport& report);
std::string bench_json(const BenchReport& report);
void write_bench_csv(std::ostream& os, const BenchReport& report);

}  // namespace theta
