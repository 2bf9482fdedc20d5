#include "theta/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "theta/asymptotics.hpp"
#include "theta/bench.hpp"
#include "theta/errors.hpp"
#include "theta/exact_core.hpp"
#include "theta/fast_kernels.hpp"
#include "theta/published.hpp"
#include "theta/sieve.hpp"
#include "theta/verifier.hpp"

namespace theta {

TableResult compute_table(std::int64_t limit) {
  if (limit < 1) throw std::domain_error("table requires --max >= 1");
  TableResult t;
  for (std::int64_t k = 1; k <= limit; ++k) {
    TableRow row{k, s_k_fast(k).value, t_k_closed(k).value};
    if (k <= 64 && row.s_k != s_k_naive(k).value) ++t.naive_mismatches;
    if (k <= 64 && row.t_k != t_k_naive(k).value) ++t.naive_mismatches;
    t.rows.push_back(row);
  }
  const auto n = std::min<std::int64_t>(limit, published::kTableS.size());
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto& row = t.rows[static_cast<std::size_t>(k - 1)];
    const auto pub_s = published::kTableS[static_cast<std::size_t>(k - 1)];
    if (pub_s != row.s_k) {
      // S(k) always has parity opposite to k.
      std::string note = ((pub_s + k) % 2 == 0) ? "parity-inconsistent: same parity as k" : "value differs";
      t.discrepancies.push_back({"S", k, std::to_string(pub_s), std::to_string(row.s_k), note});
    }
    const auto pub_t = published::kTableT[static_cast<std::size_t>(k - 1)];
    if (pub_t != row.t_k) t.discrepancies.push_back({"T", k, std::to_string(pub_t), std::to_string(row.t_k), "value differs"});
  }
  return t;
}

std::int64_t emit_table(const TableResult& table, std::ostream& os) {
  os << "k,s_k,t_k\n";
  for (const auto& r : table.rows) os << r.k << ',' << r.s_k << ',' << r.t_k << '\n';
  if (!table.discrepancies.empty()) {
    os << "# published table entries that disagree with the recomputation\n";
    for (const auto& d : table.discrepancies) {
      os << "# " << d.item << "(" << d.k << ") published=" << d.published << " recomputed=" << d.computed;
      if (!d.note.empty()) os << " " << d.note;
      os << '\n';
    }
  }
  if (table.naive_mismatches != 0) os << "# fast/naive mismatches for k <= 64: " << table.naive_mismatches << '\n';
  return static_cast<std::int64_t>(table.rows.size());
}

namespace {

struct Config {
  std::int64_t max = 0;
  int threads = 1;
  std::string out;
  std::string format;
  std::string checkpoint;
  bool quiet = false;
  std::string threshold;
  bool primes = false;
  std::string suite = "all";
};

void add_common(CLI::App* sub, Config& cfg, const std::string& default_format,
                std::vector<std::string> formats) {
  cfg.format = default_format;
  sub->add_option("--max", cfg.max, "upper limit")->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(formats)));
  sub->add_option("--checkpoint", cfg.checkpoint, "checkpoint file for resumable scans");
  sub->add_flag("--quiet", cfg.quiet, "suppress progress and notes on stderr");
}

// Writes the whole payload at once so --out never leaves a partial file.
void deliver(const Config& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out.empty()) {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + cfg.out + " for writing");
  f << payload;
  f.flush();
  if (!f) throw IoError("write failed for " + cfg.out);
}

void report_discrepancies(const std::vector<Discrepancy>& ds, std::ostream& err) {
  for (const auto& d : ds) {
    err << "discrepancy: " << d.item << " k=" << d.k << " published=" << d.published << " computed=" << d.computed;
    if (!d.note.empty()) err << " (" << d.note << ")";
    err << '\n';
  }
}

std::optional<std::filesystem::path> checkpoint_path(const Config& cfg) {
  if (cfg.checkpoint.empty()) return std::nullopt;
  return std::filesystem::path(cfg.checkpoint);
}

int cmd_table(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto table = compute_table(cfg.max ? cfg.max : 20);
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) rows.push_back({{"k", r.k}, {"s_k", r.s_k}, {"t_k", r.t_k}});
    j["rows"] = std::move(rows);
    auto ds = nlohmann::ordered_json::array();
    for (const auto& d : table.discrepancies) {
      ds.push_back({{"table", d.item}, {"k", d.k}, {"published", d.published}, {"recomputed", d.computed}, {"note", d.note}});
    }
    j["discrepancies"] = std::move(ds);
    j["naive_mismatches"] = table.naive_mismatches;
    os << j.dump(2) << '\n';
  } else {
    emit_table(table, os);
  }
  deliver(cfg, os.str(), out);
  if (table.naive_mismatches != 0) {
    err << "fast and naive sums disagree for " << table.naive_mismatches << " values\n";
    return exit_code::failure;
  }
  if (!table.discrepancies.empty()) {
    if (!cfg.quiet) err << table.discrepancies.size() << " published table entries disagree with the recomputation\n";
    return exit_code::failure;
  }
  return exit_code::ok;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::int64_t limit = cfg.max ? cfg.max : 300;
  std::vector<VerificationReport> reports;
  const auto& s = cfg.suite;
  if (s == "all") {
    reports = verify_all(limit);
  } else if (s == "reciprocity") {
    reports.push_back(verify_reciprocity_theta(std::max<std::int64_t>(limit, 2)));
  } else if (s == "dedekind") {
    reports.push_back(verify_reciprocity_dedekind(limit));
  } else if (s == "elementary") {
    reports.push_back(verify_elementary(std::max<std::int64_t>(limit, 2)));
  } else if (s == "fractional-parts") {
    reports.push_back(verify_fractional_parts(std::max<std::int64_t>(limit, 3)));
  } else if (s == "pairing") {
    reports.push_back(verify_pairing(std::max<std::int64_t>(limit, 7)));
  } else if (s == "lower-bounds") {
    reports.push_back(verify_lower_bounds(std::max<std::int64_t>(limit, 3)));
  } else {
    reports.push_back(verify_fast_equivalence(std::min<std::int64_t>(limit, 512), std::min<std::int64_t>(limit, 512)));
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    os << '[';
    for (std::size_t i = 0; i < reports.size(); ++i) os << (i ? "," : "") << to_json(reports[i]);
    os << "]\n";
  } else {
    for (const auto& r : reports) os << to_text(r);
  }
  deliver(cfg, os.str(), out);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (!ok) err << "verification failures found\n";
  return ok ? exit_code::ok : exit_code::failure;
}

std::string records_json(const std::vector<ScanRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    arr.push_back({{"k", r.k}, {"s_k", r.s_k}, {"is_prime", r.is_prime}, {"k_mod4", r.k_mod4},
                   {"s_mod4", r.s_mod4}, {"ratio", r.ratio}, {"gt_0", r.gt_0}, {"gt_2k", r.gt_2k},
                   {"gt_3k", r.gt_3k}, {"gt_4k", r.gt_4k}});
  }
  return arr.dump() + "\n";
}

std::string records_text(const std::vector<ScanRecord>& records) {
  std::ostringstream os;
  for (const auto& r : records) os << "S(" << r.k << ") = " << r.s_k << (r.is_prime ? "  prime" : "") << '\n';
  return os.str();
}

std::string render_records(const Config& cfg, const std::vector<ScanRecord>& records) {
  if (cfg.format == "json") return records_json(records);
  if (cfg.format == "text") return records_text(records);
  std::ostringstream os;
  write_scan_csv(os, records);
  return os.str();
}

int cmd_scan(const Config& cfg, std::ostream& out, std::ostream& err) {
  ScanOptions opt;
  opt.limit = cfg.max ? cfg.max : 10000;
  opt.primes_only = cfg.primes;
  opt.workers = cfg.threads;
  opt.checkpoint = checkpoint_path(cfg);
  const auto result = scan_thresholds(opt);

  std::vector<ScanRecord> rows = result.records;
  std::vector<Discrepancy> ds = conjecture_counterexamples(result.records);
  if (!cfg.threshold.empty()) {
    const Threshold t = parse_threshold(cfg.threshold);
    const auto& ex = result.exceptions[t == Threshold::zero ? 0 : static_cast<std::size_t>(t) - 1];
    std::vector<std::int64_t> ks;
    for (const auto& [k, s] : ex.below) ks.push_back(k);
    std::erase_if(rows, [&](const ScanRecord& r) { return !r.is_prime || !std::binary_search(ks.begin(), ks.end(), r.k); });
    if (!cfg.quiet) {
      for (const auto& [k, s] : ex.equal) err << "note: S(" << k << ") = " << s << " equals the threshold exactly\n";
    }
    auto more = compare_threshold(ex, opt.limit);
    ds.insert(ds.end(), more.begin(), more.end());
  }
  auto spots = compare_spot_values(result.records);
  ds.insert(ds.end(), spots.begin(), spots.end());
  deliver(cfg, render_records(cfg, rows), out);
  report_discrepancies(ds, err);
  return ds.empty() ? exit_code::ok : exit_code::failure;
}

int cmd_census(const Config& cfg, std::ostream& out, std::ostream& err) {
  ScanOptions opt;
  opt.limit = std::max<std::int64_t>(cfg.max ? cfg.max : 10000, 2);
  opt.primes_only = false;
  opt.workers = cfg.threads;
  opt.checkpoint = checkpoint_path(cfg);
  const auto result = scan_thresholds(opt);
  const auto census = census_from_records(result.records, opt.limit);

  std::ostringstream os;
  if (cfg.format == "csv") {
    std::vector<ScanRecord> neg;
    for (const auto& r : result.records) {
      if (r.s_k < 0) neg.push_back(r);
    }
    write_scan_csv(os, neg);
  } else if (cfg.format == "text") {
    os << "negative S(k) for k <= " << census.limit << ": " << census.total << '\n'
       << "  3 | k, 5 !| k:  " << census.div3_not5 << '\n'
       << "  5 | k, 3 !| k:  " << census.div5_not3 << '\n'
       << "  15 | k:        " << census.div15 << '\n'
       << "  other:         " << census.other << '\n'
       << "  S(k) < -k:     " << census.extremes.size() << '\n';
  } else {
    os << census_json(census) << '\n';
  }
  deliver(cfg, os.str(), out);

  auto ds = compare_census(census);
  auto spots = compare_spot_values(result.records);
  ds.insert(ds.end(), spots.begin(), spots.end());
  report_discrepancies(ds, err);
  return ds.empty() ? exit_code::ok : exit_code::failure;
}

int cmd_asympt(const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::int64_t limit = cfg.max ? cfg.max : 1000000;
  if (limit < 1000) throw std::domain_error("asympt requires --max >= 1000");
  const auto tables = build_sieves(static_cast<std::uint64_t>(limit));
  const auto consts = compute_constants();
  std::vector<std::int64_t> xs;
  for (std::int64_t d = 1000; d <= limit; d *= 10) {
    for (std::int64_t m : {1, 2, 5}) {
      if (d * m <= limit) xs.push_back(d * m);
    }
    if (d > limit / 10) break;
  }
  if (xs.back() != limit) xs.push_back(limit);
  const auto scan = error_scan(xs, tables, consts);

  bool ok = true;
  const double a_gap = std::abs(static_cast<double>(residue_constant_A()) - consts.A);
  if (a_gap >= 1e-12) ok = false;
  std::vector<double> decade_err;
  for (const auto& s : scan.samples) {
    std::int64_t x = s.x;
    while (x % 10 == 0) x /= 10;
    if (x == 1) decade_err.push_back(s.rel_err);
  }
  for (std::size_t i = 1; i < decade_err.size(); ++i) {
    if (decade_err[i] >= decade_err[i - 1]) ok = false;
  }

  std::ostringstream os;
  if (cfg.format == "csv") {
    write_samples_csv(os, scan.samples);
  } else {
    nlohmann::ordered_json j;
    j["gamma"] = consts.gamma;
    j["zeta_prime_2"] = consts.zeta_prime_2;
    j["A"] = consts.A;
    j["A_residue_gap"] = a_gap;
    j["c_log"] = consts.c_log;
    j["c_quad"] = consts.c_quad;
    auto samples = nlohmann::ordered_json::array();
    for (const auto& s : scan.samples) {
      samples.push_back({{"x", s.x}, {"main_term", s.main}, {"abs_err", s.abs_err}, {"rel_err", s.rel_err}});
    }
    j["samples"] = std::move(samples);
    j["error_exponent"] = scan.slope ? nlohmann::ordered_json(*scan.slope) : nullptr;
    if (cfg.format == "json") {
      os << j.dump(2) << '\n';
    } else {
      char buf[200];
      std::snprintf(buf, sizeof buf, "gamma = %.15f\nzeta'(2) = %.15f\nA = %.15f (residue gap %.2e)\nc_quad = %.15f\n",
                    consts.gamma, consts.zeta_prime_2, consts.A, a_gap, consts.c_quad);
      os << buf;
      for (const auto& s : scan.samples) {
        std::snprintf(buf, sizeof buf, "x = %-10lld rel_err = %.3e\n", static_cast<long long>(s.x), s.rel_err);
        os << buf;
      }
      if (scan.slope) {
        std::snprintf(buf, sizeof buf, "error exponent = %.3f\n", *scan.slope);
        os << buf;
      }
    }
  }
  deliver(cfg, os.str(), out);
  if (!ok) err << "asymptotic checks failed\n";
  return ok ? exit_code::ok : exit_code::failure;
}

int cmd_bench(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto report = run_bench(cfg.max ? cfg.max : 50000);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << bench_json(report) << '\n';
  } else if (cfg.format == "csv") {
    write_bench_csv(os, report);
  } else {
    os << bench_text(report);
  }
  deliver(cfg, os.str(), out);
  if (!report.passed()) err << "fast path growth or agreement check failed\n";
  if (!cfg.quiet && !report.naive_quadratic()) err << "note: naive growth exponent outside [1.7, 2.3]\n";
  return report.passed() ? exit_code::ok : exit_code::failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"theta sums toolkit"};
  app.require_subcommand(1);
  Config cfg;
  auto* table = app.add_subcommand("table", "S(k) and T(k) table with published-value check");
  add_common(table, cfg, "csv", {"csv", "json", "text"});
  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  add_common(verify, cfg, "text", {"json", "text"});
  verify->add_option("suite", cfg.suite, "suite name")
      ->check(CLI::IsMember({"all", "reciprocity", "dedekind", "elementary", "fractional-parts", "pairing",
                             "lower-bounds", "equivalence"}));
  auto* scan = app.add_subcommand("scan", "S(k) threshold scan");
  add_common(scan, cfg, "csv", {"csv", "json", "text"});
  scan->add_option("--threshold", cfg.threshold, "report primes with S(k) below t*k")
      ->check(CLI::IsMember({"0", "2k", "3k", "4k"}));
  scan->add_flag("--primes", cfg.primes, "scan prime k only");
  auto* census = app.add_subcommand("census", "negative S(k) census");
  add_common(census, cfg, "json", {"csv", "json", "text"});
  auto* asympt = app.add_subcommand("asympt", "partial sums of a_n against the main term");
  add_common(asympt, cfg, "text", {"csv", "json", "text"});
  auto* bench = app.add_subcommand("bench", "naive vs fast timing");
  add_common(bench, cfg, "text", {"csv", "json", "text"});

  // Only one subcommand parses, so the shared Config is unambiguous; the
  // default format is reset per subcommand.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }
  auto* chosen = app.get_subcommands().front();
  if (auto* opt = chosen->get_option_no_throw("--format"); opt && opt->count() == 0) {
    cfg.format = chosen == verify || chosen == asympt || chosen == bench ? "text"
                 : chosen == census                                       ? "json"
                                                                          : "csv";
  }

  try {
    if (chosen == table) return cmd_table(cfg, out, err);
    if (chosen == verify) return cmd_verify(cfg, out, err);
    if (chosen == scan) return cmd_scan(cfg, out, err);
    if (chosen == census) return cmd_census(cfg, out, err);
    if (chosen == asympt) return cmd_asympt(cfg, out, err);
    return cmd_bench(cfg, out, err);
  } catch (const IntegrityError& e) {
    err << "integrity error in " << e.field() << ": " << e.what() << '\n';
    return exit_code::io;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return exit_code::io;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace theta
