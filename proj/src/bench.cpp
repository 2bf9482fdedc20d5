#include "theta/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "theta/asymptotics.hpp"
#include "theta/exact_core.hpp"
#include "theta/fast_kernels.hpp"

namespace theta {

namespace {

std::int64_t prime_at_or_below(std::int64_t x) {
  while (x > 2 && !is_prime(static_cast<std::uint64_t>(x))) --x;
  return std::max<std::int64_t>(x, 2);
}

// Repeat until the batch takes at least 20 ms, best of three batches.
template <typename F>
BenchTiming time_it(const char* method, std::int64_t k, F&& f) {
  using clock = std::chrono::steady_clock;
  int repeats = 1;
  double best = 0;
  for (;;) {
    auto t0 = clock::now();
    for (int i = 0; i < repeats; ++i) f();
    double dt = std::chrono::duration<double>(clock::now() - t0).count();
    if (dt >= 0.02 || repeats >= (1 << 20)) {
      best = dt;
      break;
    }
    repeats *= 2;
  }
  for (int round = 0; round < 2; ++round) {
    auto t0 = clock::now();
    for (int i = 0; i < repeats; ++i) f();
    best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count());
  }
  return {method, k, best / repeats, repeats};
}

std::optional<double> exponent(const std::vector<BenchTiming>& ts, const std::string& method) {
  std::vector<double> xs, ys;
  for (const auto& t : ts) {
    if (t.method != method) continue;
    xs.push_back(static_cast<double>(t.k));
    ys.push_back(t.seconds);
  }
  return fit_log_slope(xs, ys);
}

}  // namespace

BenchReport run_bench(std::int64_t limit) {
  if (limit < 100) throw std::domain_error("bench requires limit >= 100");
  BenchReport r;
  r.limit = limit;
  const std::int64_t naive_top = std::min<std::int64_t>(limit, 4000);
  volatile std::int64_t sink = 0;
  for (int step = 4; step >= 0; --step) {
    const std::int64_t k = prime_at_or_below(naive_top >> step);
    if (k < 17) continue;
    std::int64_t naive_value = 0;
    r.timings.push_back(time_it("naive", k, [&] { naive_value = s_k_naive(k).value; sink = sink + naive_value; }));
    ++r.compared;
    if (naive_value != s_k_fast(k).value) ++r.mismatches;
  }
  for (int step = 4; step >= 0; --step) {
    const std::int64_t k = prime_at_or_below(limit >> step);
    if (k < 17) continue;
    r.timings.push_back(time_it("fast", k, [&] { sink = sink + s_k_fast(k).value; }));
  }
  r.fast_exponent = exponent(r.timings, "fast");
  r.naive_exponent = exponent(r.timings, "naive");
  return r;
}

std::string bench_text(const BenchReport& r) {
  std::ostringstream os;
  char line[160];
  os << "method        k      seconds/eval  repeats\n";
  for (const auto& t : r.timings) {
    std::snprintf(line, sizeof line, "%-6s %10lld  %14.6e  %7d\n", t.method.c_str(),
                  static_cast<long long>(t.k), t.seconds, t.repeats);
    os << line;
  }
  auto fmt = [](const std::optional<double>& e) {
    if (!e) return std::string("n/a");
    char b[32];
    std::snprintf(b, sizeof b, "%.3f", *e);
    return std::string(b);
  };
  os << "fast growth exponent:  " << fmt(r.fast_exponent) << (r.passed() ? " (< 1.5)" : "") << '\n';
  os << "naive growth exponent: " << fmt(r.naive_exponent) << '\n';
  os << "agreement: " << r.compared - r.mismatches << '/' << r.compared << " naive values match fast\n";
  return os.str();
}

std::string bench_json(const BenchReport& r) {
  nlohmann::ordered_json j;
  j["limit"] = r.limit;
  auto ts = nlohmann::ordered_json::array();
  for (const auto& t : r.timings) {
    ts.push_back({{"method", t.method}, {"k", t.k}, {"seconds", t.seconds}, {"repeats", t.repeats}});
  }
  j["timings"] = std::move(ts);
  j["fast_exponent"] = r.fast_exponent ? nlohmann::ordered_json(*r.fast_exponent) : nullptr;
  j["naive_exponent"] = r.naive_exponent ? nlohmann::ordered_json(*r.naive_exponent) : nullptr;
  j["compared"] = r.compared;
  j["mismatches"] = r.mismatches;
  j["passed"] = r.passed();
  return j.dump(2);
}

void write_bench_csv(std::ostream& os, const BenchReport& r) {
  os << "method,k,seconds,repeats\n";
  char b[64];
  for (const auto& t : r.timings) {
    std::snprintf(b, sizeof b, "%.9g", t.seconds);
    os << t.method << ',' << t.k << ',' << b << ',' << t.repeats << '\n';
  }
}

}  // namespace theta
