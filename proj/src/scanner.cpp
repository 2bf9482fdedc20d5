#include "theta/scanner.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "theta/checkpoint.hpp"
#include "theta/errors.hpp"
#include "theta/fast_kernels.hpp"
#include "theta/published.hpp"
#include "theta/sieve.hpp"
#include "theta/wide.hpp"

namespace theta {

ScanRecord make_record(std::int64_t k, std::int64_t s_k, bool prime) {
  ScanRecord r;
  r.k = k;
  r.s_k = s_k;
  r.is_prime = prime;
  r.k_mod4 = static_cast<int>(k % 4);
  r.s_mod4 = static_cast<int>(floormod<std::int64_t>(s_k, 4));
  r.ratio = static_cast<double>(s_k) / static_cast<double>(k);
  r.gt_0 = s_k > 0;
  r.gt_2k = s_k > 2 * k;
  r.gt_3k = s_k > 3 * k;
  r.gt_4k = s_k > 4 * k;
  return r;
}

std::string threshold_name(Threshold t) {
  switch (t) {
    case Threshold::zero: return "0";
    case Threshold::two_k: return "2k";
    case Threshold::three_k: return "3k";
    case Threshold::four_k: return "4k";
  }
  return "?";
}

Threshold parse_threshold(const std::string& text) {
  if (text == "0") return Threshold::zero;
  if (text == "2k") return Threshold::two_k;
  if (text == "3k") return Threshold::three_k;
  if (text == "4k") return Threshold::four_k;
  throw std::invalid_argument("threshold must be one of 0, 2k, 3k, 4k");
}

ThresholdExceptions threshold_exceptions(const std::vector<ScanRecord>& records, Threshold t) {
  ThresholdExceptions ex;
  ex.threshold = t;
  const auto mult = static_cast<std::int64_t>(t);
  for (const auto& r : records) {
    if (!r.is_prime) continue;
    if (r.s_k < mult * r.k) ex.below.emplace_back(r.k, r.s_k);
    if (r.s_k == mult * r.k) ex.equal.emplace_back(r.k, r.s_k);
  }
  return ex;
}

namespace {

ChunkRecord compute_chunk(std::int64_t index, std::int64_t limit, bool primes_only, const SieveTables& sieve) {
  ChunkRecord c;
  c.index = index;
  c.lo = index * kScanChunk + 1;
  c.hi = std::min(limit, (index + 1) * kScanChunk);
  for (std::int64_t k = c.lo; k <= c.hi; ++k) {
    if (primes_only && !sieve.is_prime(static_cast<std::uint64_t>(k))) continue;
    c.values.emplace_back(k, s_k_fast(k).value);
  }
  return c;
}

}  // namespace

ScanResult scan_thresholds(const ScanOptions& options) {
  if (options.limit < 2) throw std::domain_error("scan requires limit >= 2");
  if (options.workers < 1) throw std::domain_error("scan requires workers >= 1");
  const std::string kind = options.primes_only ? "scan-primes" : "scan-all";
  const SieveTables sieve = build_sieves(static_cast<std::uint64_t>(options.limit));

  Checkpoint cp;
  cp.kind = kind;
  cp.limit = options.limit;
  if (options.checkpoint && std::filesystem::exists(*options.checkpoint)) {
    cp = load_checkpoint(*options.checkpoint);
    if (cp.kind != kind) throw IntegrityError("header.kind", "checkpoint is for " + cp.kind + ", not " + kind);
    if (cp.limit != options.limit) throw IntegrityError("header.limit", "checkpoint limit differs from requested limit");
  }

  const std::int64_t total_chunks = (options.limit + kScanChunk - 1) / kScanChunk;
  const std::int64_t wave = std::max<std::int64_t>(4 * options.workers, 8);
  std::int64_t next = static_cast<std::int64_t>(cp.chunks.size());
  std::int64_t budget = options.stop_after_chunks.value_or(total_chunks);

  while (next < total_chunks && budget > 0) {
    const std::int64_t count = std::min({wave, total_chunks - next, budget});
    std::vector<ChunkRecord> batch(static_cast<std::size_t>(count));
#pragma omp parallel for num_threads(options.workers) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      batch[static_cast<std::size_t>(i)] = compute_chunk(next + i, options.limit, options.primes_only, sieve);
    }
    for (auto& c : batch) cp.chunks.push_back(std::move(c));
    next += count;
    budget -= count;
    if (options.checkpoint) save_checkpoint(*options.checkpoint, cp);
  }

  ScanResult result;
  result.complete = next == total_chunks;
  result.completed_through = cp.completed_through();
  for (const auto& c : cp.chunks) {
    for (const auto& [k, s] : c.values) {
      result.records.push_back(make_record(k, s, sieve.is_prime(static_cast<std::uint64_t>(k))));
    }
  }
  for (Threshold t : {Threshold::zero, Threshold::two_k, Threshold::three_k, Threshold::four_k}) {
    result.exceptions.push_back(threshold_exceptions(result.records, t));
  }
  return result;
}

NegativeCensus census_from_records(const std::vector<ScanRecord>& records, std::int64_t limit) {
  NegativeCensus c;
  c.limit = limit;
  for (const auto& r : records) {
    if (r.k > limit || r.s_k >= 0) continue;
    ++c.total;
    const bool by3 = r.k % 3 == 0;
    const bool by5 = r.k % 5 == 0;
    if (by3 && by5) {
      ++c.div15;
    } else if (by3) {
      ++c.div3_not5;
    } else if (by5) {
      ++c.div5_not3;
    } else {
      ++c.other;
    }
    c.negatives.emplace_back(r.k, r.s_k);
    if (r.s_k < -r.k) c.extremes.emplace_back(r.k, r.s_k);
  }
  return c;
}

NegativeCensus negative_census(std::int64_t limit, int workers,
                               const std::optional<std::filesystem::path>& checkpoint) {
  if (limit < 1) throw std::domain_error("census requires limit >= 1");
  if (limit == 1) return census_from_records({make_record(1, 0, false)}, 1);
  ScanOptions opt;
  opt.limit = limit;
  opt.primes_only = false;
  opt.workers = workers;
  opt.checkpoint = checkpoint;
  return census_from_records(scan_thresholds(opt).records, limit);
}

Mod4Distribution mod4_from_records(const std::vector<ScanRecord>& records, std::int64_t prime_limit) {
  Mod4Distribution d;
  d.prime_limit = prime_limit;
  for (const auto& r : records) {
    if (!r.is_prime || r.k == 2 || r.k > prime_limit) continue;
    ++d.total;
    if (r.s_mod4 == 0) {
      ++d.class0;
      (r.k_mod4 == 1 ? d.k1_s0 : d.k3_s0)++;
    } else if (r.s_mod4 == 2) {
      ++d.class2;
      (r.k_mod4 == 1 ? d.k1_s2 : d.k3_s2)++;
    } else {
      ++d.other;
    }
  }
  return d;
}

Mod4Distribution mod4_distribution(std::int64_t prime_limit, int workers) {
  if (prime_limit < 5) throw std::domain_error("mod4_distribution requires prime_limit >= 5");
  ScanOptions opt;
  opt.limit = prime_limit;
  opt.primes_only = true;
  opt.workers = workers;
  return mod4_from_records(scan_thresholds(opt).records, prime_limit);
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
  os << "k,s_k,is_prime,k_mod4,s_mod4,ratio,gt_0,gt_2k,gt_3k,gt_4k\n";
  char buf[64];
  for (const auto& r : records) {
    auto res = std::to_chars(buf, buf + sizeof buf, r.ratio);
    os << r.k << ',' << r.s_k << ',' << int{r.is_prime} << ',' << r.k_mod4 << ',' << r.s_mod4 << ','
       << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << ',' << int{r.gt_0} << ','
       << int{r.gt_2k} << ',' << int{r.gt_3k} << ',' << int{r.gt_4k} << '\n';
  }
}

namespace {

template <typename T>
T parse_field(std::string_view text, int line) {
  T value{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("scan CSV line " + std::to_string(line) + ": bad field '" + std::string(text) + "'");
  }
  return value;
}

bool parse_flag(std::string_view text, int line) {
  if (text == "0") return false;
  if (text == "1") return true;
  throw std::invalid_argument("scan CSV line " + std::to_string(line) + ": bad flag");
}

}  // namespace

std::vector<ScanRecord> parse_scan_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "k,s_k,is_prime,k_mod4,s_mod4,ratio,gt_0,gt_2k,gt_3k,gt_4k") {
    throw std::invalid_argument("scan CSV: missing or wrong header");
  }
  std::vector<ScanRecord> out;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    while (true) {
      auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 10) throw std::invalid_argument("scan CSV line " + std::to_string(lineno) + ": expected 10 fields");
    ScanRecord r;
    r.k = parse_field<std::int64_t>(f[0], lineno);
    r.s_k = parse_field<std::int64_t>(f[1], lineno);
    r.is_prime = parse_flag(f[2], lineno);
    r.k_mod4 = parse_field<int>(f[3], lineno);
    r.s_mod4 = parse_field<int>(f[4], lineno);
    r.ratio = parse_field<double>(f[5], lineno);
    r.gt_0 = parse_flag(f[6], lineno);
    r.gt_2k = parse_flag(f[7], lineno);
    r.gt_3k = parse_flag(f[8], lineno);
    r.gt_4k = parse_flag(f[9], lineno);
    out.push_back(r);
  }
  return out;
}

std::string census_json(const NegativeCensus& census) {
  nlohmann::ordered_json j;
  j["limit"] = census.limit;
  j["total"] = census.total;
  j["div3_not5"] = census.div3_not5;
  j["div5_not3"] = census.div5_not3;
  j["div15"] = census.div15;
  j["other"] = census.other;
  auto extremes = nlohmann::ordered_json::array();
  for (const auto& [k, s] : census.extremes) extremes.push_back({k, s});
  j["extremes"] = std::move(extremes);
  return j.dump();
}

namespace {

void diff_sets(const std::string& item, const std::map<std::int64_t, std::int64_t>& published,
               const std::map<std::int64_t, std::int64_t>& computed, bool compare_values,
               std::vector<Discrepancy>& out) {
  for (const auto& [k, s] : published) {
    auto it = computed.find(k);
    if (it == computed.end()) {
      out.push_back({item, k, "listed", "not an exception", ""});
    } else if (compare_values && it->second != s) {
      out.push_back({item, k, std::to_string(s), std::to_string(it->second), "S(k) value differs"});
    }
  }
  for (const auto& [k, s] : computed) {
    if (!published.contains(k)) out.push_back({item, k, "not listed", "S(k)=" + std::to_string(s), ""});
  }
}

}  // namespace

std::vector<Discrepancy> compare_threshold(const ThresholdExceptions& ex, std::int64_t limit) {
  std::vector<Discrepancy> out;
  std::map<std::int64_t, std::int64_t> published, computed;
  std::int64_t range = 0;
  bool with_values = false;
  std::vector<KValue> failing = ex.below;
  switch (ex.threshold) {
    case Threshold::zero:
      return out;
    case Threshold::two_k:
      range = std::min(limit, published::kTableLimit - 1);
      for (auto k : published::kBelowTwoK) published[k] = 0;
      // "less than 2k": equality cases are not listed.
      failing = ex.below;
      break;
    case Threshold::three_k:
      range = std::min(limit, published::kTableLimit - 1);
      for (auto k : published::kBelowThreeK) published[k] = 0;
      failing.insert(failing.end(), ex.equal.begin(), ex.equal.end());
      break;
    case Threshold::four_k:
      range = std::min(limit, published::kFourKLimit);
      for (auto [k, s] : published::kBelowFourK) published[k] = s;
      failing.insert(failing.end(), ex.equal.begin(), ex.equal.end());
      with_values = true;
      break;
  }
  std::erase_if(published, [&](const auto& kv) { return kv.first > range; });
  for (const auto& [k, s] : failing) {
    if (k <= range) computed[k] = s;
  }
  diff_sets("threshold " + threshold_name(ex.threshold), published, computed, with_values, out);
  return out;
}

std::vector<Discrepancy> compare_census(const NegativeCensus& census) {
  std::vector<Discrepancy> out;
  if (census.limit < published::kTableLimit) return out;
  std::vector<ScanRecord> within;
  for (const auto& [k, s] : census.negatives) {
    if (k <= published::kTableLimit) within.push_back(make_record(k, s, false));
  }
  const auto c = census_from_records(within, published::kTableLimit);
  const auto& p = published::kNegativeCounts;
  auto check = [&](const char* what, std::int64_t pub, std::int64_t got) {
    if (pub != got) out.push_back({std::string("census ") + what, published::kTableLimit, std::to_string(pub), std::to_string(got), ""});
  };
  check("total", p.total, c.total);
  check("div3_not5", p.div3_not5, c.div3_not5);
  check("div5_not3", p.div5_not3, c.div5_not3);
  check("div15", p.div15, c.div15);
  return out;
}

std::vector<Discrepancy> compare_spot_values(const std::vector<ScanRecord>& records) {
  std::vector<Discrepancy> out;
  for (const auto& [k, s] : published::kSpotValues) {
    auto it = std::lower_bound(records.begin(), records.end(), k,
                               [](const ScanRecord& r, std::int64_t key) { return r.k < key; });
    if (it == records.end() || it->k != k) continue;
    if (it->s_k != s) out.push_back({"spot value", k, std::to_string(s), std::to_string(it->s_k), ""});
  }
  return out;
}

std::vector<Discrepancy> conjecture_counterexamples(const std::vector<ScanRecord>& records) {
  std::vector<Discrepancy> out;
  for (const auto& r : records) {
    if (!r.is_prime) continue;
    if (r.k > 5 && r.s_k <= 0) out.push_back({"positivity (k>5)", r.k, "> 0", std::to_string(r.s_k), ""});
    if (r.k > 233 && r.s_k <= 2 * r.k) out.push_back({"S(k) > 2k (k>233)", r.k, "> " + std::to_string(2 * r.k), std::to_string(r.s_k), ""});
    if (r.k > 3119 && r.s_k <= 3 * r.k) out.push_back({"S(k) > 3k (k>3119)", r.k, "> " + std::to_string(3 * r.k), std::to_string(r.s_k), ""});
  }
  return out;
}

}  // namespace theta
