#pragma once

// Benchmark harness: runs a solver over a generated instance family for a
// range of n and seeds, one CSV record per run plus per-n aggregates.

#include "ssat/core.hpp"
#include "ssat/verdict.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ssat {

enum class BenchSolver { Board, Linked, Enumerate, Probabilistic, Extract, VerifyUnsat };
enum class BenchFamily { Blocked, Unique, Random, RandomDistinct, General, ComplementClosed };

struct BenchConfig {
  BenchSolver solver = BenchSolver::Linked;
  BenchFamily family = BenchFamily::Blocked;
  unsigned n_min = 4;
  unsigned n_max = 10;
  /// Clause count for families that take one; family default when empty
  /// (2^min(n,20) for Simple families, 4n for General, 2^(n-1) for
  /// ComplementClosed).
  std::optional<std::size_t> m;
  std::uint64_t seed = 1;
  /// Runs per n, with seeds seed, seed + 1, ...
  unsigned repetitions = 1;
  std::optional<std::uint64_t> budget;
  unsigned max_width = 3;
  unsigned threads = 1;
  /// When false wall_ns is reported as 0 so reports compare byte-for-byte.
  bool timing = true;
  unsigned table_cap = kDefaultTableCap;

  /// Throws Error on unknown names or a field of the wrong type.
  static BenchConfig from_json(const nlohmann::json& j);
  /// Throws CapacityError/Error before any run starts.
  void validate() const;
};

struct BenchRecord {
  unsigned n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  /// sat/unsat/exhausted; for VerifyUnsat the UnsatCheck result.
  std::string verdict;
  Counters counters;
  std::uint64_t wall_ns = 0;
};

struct BenchSummary {
  unsigned n = 0;
  std::size_t runs = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;
  std::size_t exhausted = 0;
  double mean_rows_read = 0, median_rows_read = 0;
  double mean_evaluations = 0, median_evaluations = 0;
  double mean_removals = 0, median_removals = 0;
  double mean_oracle_calls = 0, median_oracle_calls = 0;
  double mean_random_draws = 0, median_random_draws = 0;
  double mean_wall_ns = 0, median_wall_ns = 0;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchRecord> records;
  std::vector<BenchSummary> summary;
};

BenchReport run_bench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "solver,family,n,m,seed,verdict,rows_read,evaluations,removals,oracle_calls,"
    "random_draws,wall_ns";
inline constexpr const char* kBenchSummaryHeader =
    "solver,family,n,runs,sat,unsat,exhausted,mean_rows_read,median_rows_read,"
    "mean_evaluations,median_evaluations,mean_removals,median_removals,"
    "mean_oracle_calls,median_oracle_calls,mean_random_draws,median_random_draws,"
    "mean_wall_ns,median_wall_ns";

void write_bench_csv(const BenchReport& report, std::ostream& out);
void write_bench_summary_csv(const BenchReport& report, std::ostream& out);

std::string_view to_string(BenchSolver solver);
std::string_view to_string(BenchFamily family);

} // namespace ssat
