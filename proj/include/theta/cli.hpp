#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "theta/scanner.hpp"

namespace theta {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;  // identity failure or published-value discrepancy
inline constexpr int usage = 2;
inline constexpr int io = 3;  // I/O or checkpoint integrity
}  // namespace exit_code

struct TableRow {
  std::int64_t k = 0;
  std::int64_t s_k = 0;
  std::int64_t t_k = 0;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::vector<Discrepancy> discrepancies;  // against the printed tables
  std::int64_t naive_mismatches = 0;       // fast vs naive, k <= 64
};

/// S(k) and T(k) for k = 1..limit with the published-table comparison.
TableResult compute_table(std::int64_t limit);

/// CSV `k,s_k,t_k` followed by a `#` footnote block listing discrepancies.
/// Returns the number of data rows.
std::int64_t emit_table(const TableResult& table, std::ostream& os);

/// Parses argv (without the program name) and dispatches. Primary output goes
/// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace theta
