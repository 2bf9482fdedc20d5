#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "theta/checkpoint.hpp"
#include "theta/cli.hpp"

using namespace theta;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("table") {
  const auto r = run_cli({"table", "--max", "20", "--format", "csv"});
  CHECK(r.code == exit_code::failure);  // printed S(k) column disagrees from k = 9
  const auto ls = lines(r.out);
  CHECK(ls[0] == "k,s_k,t_k");
  CHECK(ls[5] == "5,4,-9");
  CHECK(ls[9] == "9,8,-25");
  int footnotes = 0;
  for (const auto& l : ls) {
    if (l.rfind("# S(", 0) == 0) ++footnotes;
    CHECK(l.rfind("# T(", 0) != 0);
  }
  CHECK(footnotes == 12);
  CHECK(r.out.find("# S(9) published=11 recomputed=8 parity-inconsistent") != std::string::npos);

  const auto eight = run_cli({"table", "--max", "8"});
  CHECK(eight.code == exit_code::ok);
  const auto rows = lines(eight.out);
  REQUIRE(rows.size() == 9);
  const char* s_col[] = {"0", "1", "2", "5", "4", "7", "10", "11"};
  for (int k = 1; k <= 8; ++k) CHECK(rows[k].substr(rows[k].find(',') + 1).rfind(std::string(s_col[k - 1]) + ",", 0) == 0);
}

TEST_CASE("table rows follow the computed sums") {
  const auto t = compute_table(40);
  CHECK(t.naive_mismatches == 0);
  CHECK(t.rows.size() == 40);
  CHECK(t.discrepancies.size() == 12);
  for (const auto& d : t.discrepancies) CHECK(d.item == "S");
  std::ostringstream os;
  CHECK(emit_table(t, os) == 40);
}

TEST_CASE("verify") {
  const auto r = run_cli({"verify", "all", "--max", "80"});
  CHECK(r.code == exit_code::ok);
  CHECK(lines(r.out).size() == 7);
  const auto j = run_cli({"verify", "dedekind", "--max", "40", "--format", "json"});
  CHECK(j.code == exit_code::ok);
  const auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["suite"] == "reciprocity-dedekind");
  CHECK(parsed[0]["failures"].empty());
}

TEST_CASE("scan") {
  const auto r = run_cli({"scan", "--threshold", "2k", "--max", "10000", "--primes", "--quiet"});
  CHECK(r.code == exit_code::ok);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 18);  // header + 17 rows
  CHECK(ls.back().rfind("233,", 0) == 0);
  CHECK(r.err.empty());

  const auto noisy = run_cli({"scan", "--threshold", "2k", "--max", "100", "--primes"});
  CHECK(noisy.err.find("S(19) = 38") != std::string::npos);

  const auto a = run_cli({"scan", "--max", "3000", "--threads", "1"});
  const auto b = run_cli({"scan", "--max", "3000", "--threads", "4"});
  CHECK(a.out == b.out);
  CHECK(a.code == exit_code::ok);

  const auto js = run_cli({"scan", "--max", "50", "--primes", "--format", "json"});
  CHECK(nlohmann::json::parse(js.out).size() == 15);
}

TEST_CASE("census") {
  const auto r = run_cli({"census", "--max", "3000"});
  CHECK(r.code == exit_code::ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["limit"] == 3000);
  CHECK(j["total"] == j["div3_not5"].get<int>() + j["div5_not3"].get<int>() + j["div15"].get<int>() + j["other"].get<int>());
  const auto keys = std::vector<std::string>{"limit", "total", "div3_not5", "div5_not3", "div15", "other", "extremes"};
  std::vector<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
  std::sort(got.begin(), got.end());
  auto want = keys;
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("asympt and bench") {
  const auto a = run_cli({"asympt", "--max", "100000", "--format", "csv"});
  CHECK(a.code == exit_code::ok);
  CHECK(lines(a.out)[0] == "x,partial_sum_times_two,main_term,abs_err,rel_err");
  const auto b = run_cli({"bench", "--max", "20000", "--format", "json", "--quiet"});
  CHECK(b.code == exit_code::ok);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["mismatches"] == 0);
  CHECK(j["fast_exponent"].get<double>() < 1.5);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == exit_code::usage);
  CHECK(run_cli({"frobnicate"}).code == exit_code::usage);
  CHECK(run_cli({"table", "--max", "0"}).code == exit_code::usage);
  CHECK(run_cli({"table", "--bogus"}).code == exit_code::usage);
  CHECK(run_cli({"scan", "--threshold", "5k"}).code == exit_code::usage);
  CHECK(run_cli({"scan", "--threads", "0"}).code == exit_code::usage);
  CHECK(run_cli({"verify", "nonsense"}).code == exit_code::usage);
  CHECK(run_cli({"table", "--format", "xml"}).code == exit_code::usage);
  CHECK(run_cli({"bench", "--max", "50"}).code == exit_code::usage);
  CHECK(run_cli({"--help"}).code == exit_code::ok);
}

TEST_CASE("I/O and integrity errors") {
  CHECK(run_cli({"table", "--max", "5", "--out", "/nonexistent-dir/x.csv"}).code == exit_code::io);
  const auto dir = fs::temp_directory_path() / "theta_cli_tests";
  fs::create_directories(dir);
  const auto cp = dir / "bad.jsonl";
  {
    std::ofstream f(cp);
    f << "{\"version\":1,\"kind\":\"scan-all\",\"limit\":100}\n{\"checksum\":\"00000000\"}\n";
  }
  const auto r = run_cli({"scan", "--max", "100", "--checkpoint", cp.string()});
  CHECK(r.code == exit_code::io);
  CHECK(r.err.find("checksum") != std::string::npos);

  const auto out = dir / "table.csv";
  fs::remove(out);
  CHECK(run_cli({"table", "--max", "8", "--out", out.string()}).code == exit_code::ok);
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  CHECK(first == "k,s_k,t_k");
}

TEST_CASE("checkpointed scan through the CLI matches a direct run") {
  const auto dir = fs::temp_directory_path() / "theta_cli_tests";
  fs::create_directories(dir);
  const auto cp = dir / "scan.jsonl";
  fs::remove(cp);
  const auto direct = run_cli({"scan", "--max", "5000"});
  const auto first = run_cli({"scan", "--max", "5000", "--checkpoint", cp.string()});
  const auto again = run_cli({"scan", "--max", "5000", "--checkpoint", cp.string(), "--threads", "2"});
  CHECK(first.out == direct.out);
  CHECK(again.out == direct.out);
  CHECK(load_checkpoint(cp).completed_through() == 5000);
}
