#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace theta {

inline constexpr std::int64_t kScanChunk = 256;

struct ScanRecord {
  std::int64_t k = 0;
  std::int64_t s_k = 0;
  bool is_prime = false;
  int k_mod4 = 0;
  int s_mod4 = 0;
  double ratio = 0;  // s_k / k
  bool gt_0 = false;
  bool gt_2k = false;
  bool gt_3k = false;
  bool gt_4k = false;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

ScanRecord make_record(std::int64_t k, std::int64_t s_k, bool is_prime);

enum class Threshold { zero = 0, two_k = 2, three_k = 3, four_k = 4 };

std::string threshold_name(Threshold t);
/// Accepts "0", "2k", "3k", "4k"; throws std::invalid_argument otherwise.
Threshold parse_threshold(const std::string& text);

using KValue = std::pair<std::int64_t, std::int64_t>;  // (k, S(k))

/// Primes failing S(k) > t*k, split into strict failures (S(k) < t*k) and
/// boundary equalities (S(k) == t*k).
struct ThresholdExceptions {
  Threshold threshold = Threshold::two_k;
  std::vector<KValue> below;
  std::vector<KValue> equal;
};

struct ScanOptions {
  std::int64_t limit = 0;
  bool primes_only = true;
  int workers = 1;
  std::optional<std::filesystem::path> checkpoint;
  // Stop after this many newly completed chunks (simulated interruption).
  std::optional<std::int64_t> stop_after_chunks;
};

struct ScanResult {
  std::vector<ScanRecord> records;  // ascending k
  std::vector<ThresholdExceptions> exceptions;  // one per Threshold, ascending
  bool complete = false;
  std::int64_t completed_through = 0;
};

/// S(k) via s_k_fast for every k (or every prime k) in [1, limit], chunked
/// and parallel over `workers` OpenMP threads. Output is independent of the
/// worker count. With a checkpoint path, resumes from and writes to it after
/// each merged wave. Throws IntegrityError on a mismatched or corrupt
/// checkpoint and std::domain_error for limit < 2 or workers < 1.
ScanResult scan_thresholds(const ScanOptions& options);

ThresholdExceptions threshold_exceptions(const std::vector<ScanRecord>& records, Threshold t);

struct NegativeCensus {
  std::int64_t limit = 0;
  std::int64_t total = 0;
  std::int64_t div3_not5 = 0;
  std::int64_t div5_not3 = 0;
  std::int64_t div15 = 0;
  std::int64_t other = 0;
  std::vector<KValue> extremes;   // S(k) < -k
  std::vector<KValue> negatives;  // every S(k) < 0, ascending k
};

NegativeCensus census_from_records(const std::vector<ScanRecord>& records, std::int64_t limit);
NegativeCensus negative_census(std::int64_t limit, int workers = 1,
                               const std::optional<std::filesystem::path>& checkpoint = std::nullopt);

struct Mod4Distribution {
  std::int64_t prime_limit = 0;
  std::int64_t total = 0;
  std::int64_t class0 = 0;
  std::int64_t class2 = 0;
  std::int64_t other = 0;  // any residue outside {0,2}
  // Correspondence with k mod 4: [k mod 4 == 1 ? 0 : 1][S(k) mod 4 / 2]
  std::int64_t k1_s0 = 0, k1_s2 = 0, k3_s0 = 0, k3_s2 = 0;
};

Mod4Distribution mod4_distribution(std::int64_t prime_limit, int workers = 1);
Mod4Distribution mod4_from_records(const std::vector<ScanRecord>& records, std::int64_t prime_limit);

// Serialization.

/// Header `k,s_k,is_prime,k_mod4,s_mod4,ratio,gt_0,gt_2k,gt_3k,gt_4k`; ratio
/// uses the shortest round-trip representation.
void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& records);
/// Inverse of write_scan_csv. Throws std::invalid_argument on malformed input.
std::vector<ScanRecord> parse_scan_csv(std::istream& is);

std::string census_json(const NegativeCensus& census);

// Comparison against published values.

struct Discrepancy {
  std::string item;
  std::int64_t k = 0;
  std::string published;
  std::string computed;
  std::string note;
};

std::vector<Discrepancy> compare_threshold(const ThresholdExceptions& ex, std::int64_t limit);
std::vector<Discrepancy> compare_census(const NegativeCensus& census);
/// Spot values from the text that fall inside the census range.
std::vector<Discrepancy> compare_spot_values(const std::vector<ScanRecord>& records);

/// Primes beyond a conjectured bound that fail it: S(k) <= 0 for k > 5,
/// S(k) <= 2k for k > 233, S(k) <= 3k for k > 3119.
std::vector<Discrepancy> conjecture_counterexamples(const std::vector<ScanRecord>& records);

}  // namespace theta
