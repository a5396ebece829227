// ssat command-line front end.
//
// Exit codes: 0 sat, 1 unsat, 2 exhausted, 64 usage, 65 parse error,
// 66 unreadable input, 70 internal/oracle inconsistency.

#include "ssat/bench.hpp"
#include "ssat/core.hpp"
#include "ssat/encoding.hpp"
#include "ssat/generators.hpp"
#include "ssat/io.hpp"
#include "ssat/oracle.hpp"
#include "ssat/solvers.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

class InputError : public ssat::Error {
public:
  using Error::Error;
};

struct Globals {
  std::string format = "text";
  bool counters = false;
  unsigned table_cap = ssat::kDefaultTableCap;
  bool json() const { return format == "json"; }
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  try {
    return ssat::read_file(path);
  } catch (const ssat::Error& e) {
    throw InputError(e.what());
  }
}

ssat::Instance load(const std::string& path) { return ssat::read_instance(slurp(path)); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    ssat::write_file(out_path, text);
  }
}

std::string counters_line(const ssat::Counters& c) {
  std::ostringstream s;
  s << "c rows_read=" << c.rows_read << " evaluations=" << c.evaluations
    << " removals=" << c.removals << " oracle_calls=" << c.oracle_calls
    << " random_draws=" << c.random_draws << '\n';
  return s.str();
}

int exit_code(ssat::Status status) {
  switch (status) {
  case ssat::Status::Sat: return kExitSat;
  case ssat::Status::Unsat: return kExitUnsat;
  case ssat::Status::Exhausted: return kExitExhausted;
  }
  return kExitSoftware;
}

int report(const ssat::Verdict& v, const Globals& g) {
  if (g.json()) {
    std::cout << ssat::verdict_to_json(v).dump() << '\n';
  } else {
    std::cout << to_string(v.status);
    if (v.witness) std::cout << ' ' << v.witness->to_string();
    if (v.source != ssat::Source::None) std::cout << ' ' << to_string(v.source);
    std::cout << '\n';
    if (g.counters) std::cout << counters_line(v.counters);
  }
  return exit_code(v.status);
}

std::vector<ssat::Word> parse_solution_list(const std::string& list, unsigned n) {
  std::vector<ssat::Word> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    auto a = ssat::Assignment::parse(item);
    if (a.n != n)
      throw ssat::ParseError("solution '" + item + "' does not have " + std::to_string(n) +
                             " digits");
    out.push_back(a.word);
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full-width SAT solvers, generators and benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Result format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--counters", g.counters, "Print work counters with text results");
  app.add_option("--table-cap", g.table_cap, "Largest n for 2^n-table algorithms");

  std::string input;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Instance file (DIMACS, tsat or ssat; - for stdin)")
        ->required();
  };

  auto* board = app.add_subcommand("board", "Decide by filling the complement-pair board");
  add_input(board);

  std::string augmented_out;
  auto* solve = app.add_subcommand("solve", "Linked candidate-table solver");
  add_input(solve);
  solve->add_option("--augmented-out", augmented_out,
                    "Write the instance augmented with a residual witness");

  bool dump_table = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every satisfying assignment");
  add_input(enumerate);
  enumerate->add_flag("--dump-table", dump_table, "Print the final candidate table");

  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  auto* prob = app.add_subcommand("prob", "Uniform random search without replacement");
  add_input(prob);
  prob->add_option("--seed", seed, "Generator seed");
  prob->add_option("--budget", budget, "Maximum number of draws");

  auto* qsolve = app.add_subcommand("qsolve", "Witness extraction via the decision oracle");
  add_input(qsolve);
  auto* qverify = app.add_subcommand("qverify", "Cross-check a no-solution answer");
  add_input(qverify);

  unsigned gen_n = 0;
  std::string from_solutions;
  bool blocked = false, random = false;
  std::size_t gen_m = 0;
  std::string profile = "simple";
  unsigned max_width = 3;
  std::optional<std::uint64_t> shuffle;
  std::string out_path, to;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  auto* gen_mode = gen->add_option_group("mode");
  gen_mode->add_option("--from-solutions", from_solutions,
                       "Comma-separated MSB-first solutions, e.g. 000,101");
  gen_mode->add_flag("--blocked", blocked, "All 2^n rows in board order");
  gen_mode->add_flag("--random", random, "Random instance");
  gen_mode->require_option(1);
  gen->add_option("-n,--vars", gen_n, "Variable count")->required();
  gen->add_option("-m,--clauses", gen_m, "Clause count (--random)");
  gen->add_option("--seed", seed, "Generator seed (--random)");
  gen->add_option("--shuffle", shuffle, "Shuffle rows with this seed (--from-solutions)");
  gen->add_option("--profile", profile, "Random profile")
      ->check(CLI::IsMember({"simple", "distinct", "general"}));
  gen->add_option("--max-width", max_width, "Largest clause width (general profile)");
  gen->add_option("--to", to, "Output format")->check(CLI::IsMember({"dimacs", "tsat", "ssat"}));
  gen->add_option("-o,--output", out_path, "Output file");

  auto* convert = app.add_subcommand("convert", "Convert between instance formats");
  add_input(convert);
  convert->add_option("--to", to, "Output format")
      ->required()
      ->check(CLI::IsMember({"dimacs", "tsat", "ssat"}));
  convert->add_option("-o,--output", out_path, "Output file");

  std::string config_path, summary_path;
  auto* bench = app.add_subcommand("bench", "Run a benchmark configuration");
  bench->add_option("--config", config_path, "JSON configuration")->required();
  bench->add_option("--summary", summary_path, "Write per-n aggregates as CSV");
  bench->add_option("-o,--output", out_path, "Write records CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*board) return report(ssat::solve_board(load(input), g.table_cap), g);

    if (*solve) {
      const auto instance = load(input);
      const auto v = ssat::solve_linked(instance, g.table_cap);
      if (!augmented_out.empty() && v.source == ssat::Source::Residual) {
        const auto augmented = ssat::augment_with_witness(instance, *v.witness);
        ssat::write_file(augmented_out, ssat::write_instance(augmented, ssat::Format::Ssat));
      }
      return report(v, g);
    }

    if (*enumerate) {
      const auto e = ssat::enumerate_solutions(load(input), g.table_cap);
      const bool sat = !e.solutions.empty();
      std::ostringstream table;
      if (dump_table) e.table.dump(table);
      if (g.json()) {
        nlohmann::json j;
        j["status"] = sat ? "sat" : "unsat";
        auto& list = j["solutions"] = nlohmann::json::array();
        for (auto w : e.solutions.members())
          list.push_back(ssat::Assignment(w, e.solutions.num_vars()).to_string());
        j["count"] = e.solutions.size();
        j["counters"] = ssat::counters_to_json(e.counters);
        if (dump_table) j["table"] = table.str();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << (sat ? "sat " : "unsat ") << e.solutions.size() << '\n';
        for (auto w : e.solutions.members())
          std::cout << ssat::Assignment(w, e.solutions.num_vars()).to_string() << '\n';
        if (dump_table) std::cout << table.str();
        if (g.counters) std::cout << counters_line(e.counters);
      }
      return sat ? kExitSat : kExitUnsat;
    }

    if (*prob)
      return report(ssat::solve_probabilistic(load(input), {seed, budget, g.table_cap}), g);

    if (*qsolve) return report(ssat::extract_solution(load(input), g.table_cap), g);

    if (*qverify) {
      const auto instance = load(input);
      const auto check = ssat::verify_unsat(instance, g.table_cap);
      if (g.json()) {
        std::cout << ssat::unsat_check_to_json(check, instance.num_vars()).dump() << '\n';
      } else {
        std::cout << to_string(check.result);
        if (check.result == ssat::UnsatCheck::Result::Inconsistent)
          std::cout << " x" << check.var << '=' << (check.value ? 1 : 0);
        std::cout << '\n';
        if (g.counters) std::cout << counters_line(check.counters);
      }
      switch (check.result) {
      case ssat::UnsatCheck::Result::NotApplicable: return kExitSat;
      case ssat::UnsatCheck::Result::Consistent: return kExitUnsat;
      case ssat::UnsatCheck::Result::Inconsistent: return kExitSoftware;
      }
    }

    if (*gen) {
      std::optional<ssat::Instance> instance;
      if (blocked) {
        instance = ssat::blocked_board(gen_n, g.table_cap);
      } else if (random) {
        const auto p = profile == "general"    ? ssat::Profile::general(max_width)
                       : profile == "distinct" ? ssat::Profile::simple_distinct()
                                               : ssat::Profile::simple();
        instance = ssat::random_instance(gen_n, gen_m, seed, p);
      } else {
        ssat::SolutionSet s(gen_n, parse_solution_list(from_solutions, gen_n));
        instance = ssat::from_solution_set(s, shuffle, g.table_cap);
      }
      const auto format = to.empty()
                              ? (instance->is_simple() ? ssat::Format::Ssat : ssat::Format::Tsat)
                              : ssat::parse_format(to);
      emit(ssat::write_instance(*instance, format), out_path);
      return 0;
    }

    if (*convert) {
      emit(ssat::write_instance(load(input), ssat::parse_format(to)), out_path);
      return 0;
    }

    if (*bench) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(slurp(config_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw ssat::ParseError(std::string("bench config: ") + e.what());
      }
      const auto r = ssat::run_bench(ssat::BenchConfig::from_json(j));
      std::ostringstream records;
      ssat::write_bench_csv(r, records);
      emit(records.str(), out_path);
      if (!summary_path.empty()) {
        std::ostringstream summary;
        ssat::write_bench_summary_csv(r, summary);
        ssat::write_file(summary_path, summary.str());
      }
      return 0;
    }
  } catch (const ssat::ParseError& e) {
    std::cerr << "ssat: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "ssat: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      std::cerr << "ssat: " << e.what() << '\n';
      return kExitUsage;
    }
    std::cerr << "ssat: internal error: " << e.what() << '\n';
    return kExitSoftware;
  } catch (const std::exception& e) {
    std::cerr << "ssat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
