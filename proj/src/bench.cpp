#include "ssat/bench.hpp"

#include "ssat/generators.hpp"
#include "ssat/oracle.hpp"
#include "ssat/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

namespace ssat {

namespace {

struct SolverName {
  BenchSolver solver;
  const char* name;
};
constexpr SolverName kSolvers[] = {
    {BenchSolver::Board, "board"},     {BenchSolver::Linked, "solve"},
    {BenchSolver::Enumerate, "enumerate"}, {BenchSolver::Probabilistic, "prob"},
    {BenchSolver::Extract, "qsolve"},  {BenchSolver::VerifyUnsat, "qverify"},
};

struct FamilyName {
  BenchFamily family;
  const char* name;
};
constexpr FamilyName kFamilies[] = {
    {BenchFamily::Blocked, "blocked"},
    {BenchFamily::Unique, "unique"},
    {BenchFamily::Random, "random"},
    {BenchFamily::RandomDistinct, "random_distinct"},
    {BenchFamily::General, "general"},
    {BenchFamily::ComplementClosed, "complement_closed"},
};

bool needs_table(BenchSolver s) {
  return s == BenchSolver::Board || s == BenchSolver::Linked ||
         s == BenchSolver::Enumerate || s == BenchSolver::Probabilistic;
}

bool family_needs_table(BenchFamily f) {
  return f == BenchFamily::Blocked || f == BenchFamily::Unique ||
         f == BenchFamily::RandomDistinct || f == BenchFamily::ComplementClosed;
}

std::size_t default_m(BenchFamily family, unsigned n) {
  switch (family) {
  case BenchFamily::General: return 4 * std::size_t{n};
  case BenchFamily::ComplementClosed: return n == 1 ? 2 : std::size_t{1} << (n - 1);
  default: return std::size_t{1} << std::min(n, 20U);
  }
}

Instance make_instance(const BenchConfig& c, unsigned n, std::uint64_t seed) {
  const std::size_t m = c.m.value_or(default_m(c.family, n));
  switch (c.family) {
  case BenchFamily::Blocked: return blocked_board(n, c.table_cap);
  case BenchFamily::Unique: return unique_solution_instance(n, seed, c.table_cap);
  case BenchFamily::Random: return random_instance(n, m, seed, Profile::simple());
  case BenchFamily::RandomDistinct:
    return random_instance(n, m, seed, Profile::simple_distinct());
  case BenchFamily::General:
    return random_instance(n, m, seed, Profile::general(c.max_width));
  case BenchFamily::ComplementClosed:
    return complement_closed_instance(n, m, seed, c.table_cap);
  }
  throw Error("unknown family");
}

BenchRecord run_cell(const BenchConfig& c, unsigned n, std::uint64_t seed) {
  const Instance instance = make_instance(c, n, seed);
  BenchRecord rec;
  rec.n = n;
  rec.m = instance.num_clauses();
  rec.seed = seed;

  const auto start = std::chrono::steady_clock::now();
  switch (c.solver) {
  case BenchSolver::Board: {
    auto v = solve_board(instance, c.table_cap);
    rec.verdict = to_string(v.status);
    rec.counters = v.counters;
    break;
  }
  case BenchSolver::Linked: {
    auto v = solve_linked(instance, c.table_cap);
    rec.verdict = to_string(v.status);
    rec.counters = v.counters;
    break;
  }
  case BenchSolver::Enumerate: {
    auto e = enumerate_solutions(instance, c.table_cap);
    rec.verdict = e.solutions.empty() ? "unsat" : "sat";
    rec.counters = e.counters;
    break;
  }
  case BenchSolver::Probabilistic: {
    auto v = solve_probabilistic(instance, {seed, c.budget, c.table_cap});
    rec.verdict = to_string(v.status);
    rec.counters = v.counters;
    break;
  }
  case BenchSolver::Extract: {
    auto v = extract_solution(instance, c.table_cap);
    rec.verdict = to_string(v.status);
    rec.counters = v.counters;
    break;
  }
  case BenchSolver::VerifyUnsat: {
    auto u = verify_unsat(instance, c.table_cap);
    rec.verdict = to_string(u.result);
    rec.counters = u.counters;
    break;
  }
  }
  const auto stop = std::chrono::steady_clock::now();
  if (c.timing)
    rec.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  return rec;
}

template <typename F>
std::pair<double, double> mean_median(const std::vector<const BenchRecord*>& rs, F field) {
  std::vector<double> xs;
  xs.reserve(rs.size());
  for (auto* r : rs) xs.push_back(static_cast<double>(field(*r)));
  if (xs.empty()) return {0, 0};
  double sum = 0;
  for (double x : xs) sum += x;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  const double median = xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2;
  return {sum / static_cast<double>(xs.size()), median};
}

} // namespace

std::string_view to_string(BenchSolver solver) {
  for (auto& s : kSolvers)
    if (s.solver == solver) return s.name;
  return "?";
}

std::string_view to_string(BenchFamily family) {
  for (auto& f : kFamilies)
    if (f.family == family) return f.name;
  return "?";
}

BenchConfig BenchConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("bench config must be a JSON object");
  BenchConfig c;
  try {
    for (auto& [key, value] : j.items()) {
      if (key == "solver") {
        const auto name = value.get<std::string>();
        auto it = std::find_if(std::begin(kSolvers), std::end(kSolvers),
                               [&](auto& s) { return name == s.name; });
        if (it == std::end(kSolvers)) throw Error("unknown solver '" + name + "'");
        c.solver = it->solver;
      } else if (key == "family") {
        const auto name = value.get<std::string>();
        auto it = std::find_if(std::begin(kFamilies), std::end(kFamilies),
                               [&](auto& f) { return name == f.name; });
        if (it == std::end(kFamilies)) throw Error("unknown family '" + name + "'");
        c.family = it->family;
      } else if (key == "n_min") {
        c.n_min = value.get<unsigned>();
      } else if (key == "n_max") {
        c.n_max = value.get<unsigned>();
      } else if (key == "m") {
        if (!value.is_null()) c.m = value.get<std::size_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "repetitions") {
        c.repetitions = value.get<unsigned>();
      } else if (key == "budget") {
        if (!value.is_null()) c.budget = value.get<std::uint64_t>();
      } else if (key == "max_width") {
        c.max_width = value.get<unsigned>();
      } else if (key == "threads") {
        c.threads = value.get<unsigned>();
      } else if (key == "timing") {
        c.timing = value.get<bool>();
      } else if (key == "table_cap") {
        c.table_cap = value.get<unsigned>();
      } else {
        throw Error("unknown bench config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bench config: ") + e.what());
  }
  return c;
}

void BenchConfig::validate() const {
  if (n_min < 1 || n_min > n_max) throw Error("bench config needs 1 <= n_min <= n_max");
  check_word_vars(n_max);
  if (needs_table(solver) || family_needs_table(family)) check_table_vars(n_max, table_cap);
  if (family == BenchFamily::General && needs_table(solver))
    throw Error("solver '" + std::string(to_string(solver)) +
                "' needs Simple instances; family 'general' is not");
  if (repetitions == 0) throw Error("bench config needs repetitions >= 1");
  if (m && family == BenchFamily::ComplementClosed &&
      (*m % 2 != 0 || *m > (std::size_t{1} << n_min)))
    throw Error("complement_closed needs an even m <= 2^n_min");
  if (m && family == BenchFamily::RandomDistinct && *m > (std::size_t{1} << n_min))
    throw Error("random_distinct needs m <= 2^n_min");
}

BenchReport run_bench(const BenchConfig& config) {
  config.validate();
  struct Cell {
    unsigned n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (unsigned n = config.n_min; n <= config.n_max; ++n)
    for (unsigned r = 0; r < config.repetitions; ++r) cells.push_back({n, config.seed + r});

  BenchReport report;
  report.config = config;
  report.records.resize(cells.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      if (failed) return;
      try {
        report.records[i] = run_cell(config, cells[i].n, cells[i].seed);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned threads = std::max(1U, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (unsigned n = config.n_min; n <= config.n_max; ++n) {
    std::vector<const BenchRecord*> rs;
    for (auto& r : report.records)
      if (r.n == n) rs.push_back(&r);
    BenchSummary s;
    s.n = n;
    s.runs = rs.size();
    for (auto* r : rs) {
      if (r->verdict == "sat" || r->verdict == "not-applicable") ++s.sat;
      else if (r->verdict == "exhausted") ++s.exhausted;
      else ++s.unsat;
    }
    std::tie(s.mean_rows_read, s.median_rows_read) =
        mean_median(rs, [](auto& r) { return r.counters.rows_read; });
    std::tie(s.mean_evaluations, s.median_evaluations) =
        mean_median(rs, [](auto& r) { return r.counters.evaluations; });
    std::tie(s.mean_removals, s.median_removals) =
        mean_median(rs, [](auto& r) { return r.counters.removals; });
    std::tie(s.mean_oracle_calls, s.median_oracle_calls) =
        mean_median(rs, [](auto& r) { return r.counters.oracle_calls; });
    std::tie(s.mean_random_draws, s.median_random_draws) =
        mean_median(rs, [](auto& r) { return r.counters.random_draws; });
    std::tie(s.mean_wall_ns, s.median_wall_ns) =
        mean_median(rs, [](auto& r) { return r.wall_ns; });
    report.summary.push_back(s);
  }
  return report;
}

void write_bench_csv(const BenchReport& report, std::ostream& out) {
  const auto solver = to_string(report.config.solver);
  const auto family = to_string(report.config.family);
  out << kBenchCsvHeader << '\n';
  for (const auto& r : report.records) {
    out << solver << ',' << family << ',' << r.n << ',' << r.m << ',' << r.seed << ','
        << r.verdict << ',' << r.counters.rows_read << ',' << r.counters.evaluations << ','
        << r.counters.removals << ',' << r.counters.oracle_calls << ','
        << r.counters.random_draws << ',' << r.wall_ns << '\n';
  }
}

void write_bench_summary_csv(const BenchReport& report, std::ostream& out) {
  const auto solver = to_string(report.config.solver);
  const auto family = to_string(report.config.family);
  out << kBenchSummaryHeader << '\n';
  for (const auto& s : report.summary) {
    out << solver << ',' << family << ',' << s.n << ',' << s.runs << ',' << s.sat << ','
        << s.unsat << ',' << s.exhausted << ',' << s.mean_rows_read << ','
        << s.median_rows_read << ',' << s.mean_evaluations << ',' << s.median_evaluations
        << ',' << s.mean_removals << ',' << s.median_removals << ',' << s.mean_oracle_calls
        << ',' << s.median_oracle_calls << ',' << s.mean_random_draws << ','
        << s.median_random_draws << ',' << s.mean_wall_ns << ',' << s.median_wall_ns << '\n';
  }
}

} // namespace ssat
