#include "ssat/solvers.hpp"

#include "ssat/evaluation.hpp"

#include <cassert>
#include <numeric>
#include <random>

namespace ssat {

std::string_view to_string(Status status) {
  switch (status) {
  case Status::Sat: return "sat";
  case Status::Unsat: return "unsat";
  case Status::Exhausted: return "exhausted";
  }
  return "?";
}

std::string_view to_string(Source source) {
  switch (source) {
  case Source::None: return "none";
  case Source::Row: return "row";
  case Source::Residual: return "residual";
  case Source::Oracle: return "oracle";
  }
  return "?";
}

Word board_address(Word k, unsigned n) {
  check_word_vars(n);
  const Word half = Word{1} << (n - 1);
  const Word low = k & (half - 1);
  if ((k & half) == 0) return 2 * low;
  return 2 * (half - low) - 1;
}

Word board_row(Word address, unsigned n) {
  check_word_vars(n);
  const Word half = Word{1} << (n - 1);
  if (address % 2 == 0) return address / 2;
  return half | (half - (address + 1) / 2);
}

namespace {

void require_simple(const Instance& instance, unsigned table_cap) {
  if (!instance.is_simple()) throw KindError("solver needs a Simple instance");
  check_table_vars(instance.num_vars(), table_cap);
}

[[noreturn]] void witness_failed(Word w) {
  throw std::logic_error("internal error: witness " + std::to_string(w) +
                         " does not satisfy the instance");
}

} // namespace

Verdict solve_board(const Instance& instance, unsigned table_cap) {
  require_simple(instance, table_cap);
  const unsigned n = instance.num_vars();
  const Word size = Word{1} << n;
  constexpr Word empty = ~Word{0};
  std::vector<Word> board(size, empty);
  Word filled = 0;

  Verdict v;
  v.augmented_rows = instance.num_clauses();
  for (const auto& clause : instance.clauses()) {
    ++v.counters.rows_read;
    const Word k = clause.sign;
    Word& slot = board[board_address(k, n)];
    if (slot == empty) {
      slot = k;
      ++filled;
    }
    if (filled == size) {
      v.status = Status::Unsat;
      v.board = std::move(board);
      return v;
    }
  }
  v.status = Status::Sat;
  return v;
}

Verdict solve_linked(const Instance& instance, unsigned table_cap) {
  require_simple(instance, table_cap);
  const unsigned n = instance.num_vars();
  const Circuit circuit(instance, table_cap);
  CandidateTable table(n, table_cap);

  Verdict v;
  v.augmented_rows = instance.num_clauses();
  for (const auto& clause : instance.clauses()) {
    ++v.counters.rows_read;
    const Word k = clause.sign;
    if (table.contains(k)) {
      if (eval_circuit(circuit, k, v.counters)) {
        v.status = Status::Sat;
        v.witness = Assignment(k, n);
        v.source = Source::Row;
        return v;
      }
      table.remove(k);
      table.remove(complement_word(k, n));
      ++v.counters.removals;
    }
    if (table.removed_count() == table.size()) {
      v.status = Status::Unsat;
      return v;
    }
  }

  const Word w = table.first();
  // Every row's complement pair is gone, so every survivor satisfies the
  // original instance.
  if (!eval_circuit(circuit, w, v.counters)) witness_failed(w);
  v.status = Status::Sat;
  v.witness = Assignment(w, n);
  v.source = Source::Residual;
  v.augmented_rows = instance.num_clauses() + 1;
  return v;
}

Enumeration enumerate_solutions(const Instance& instance, unsigned table_cap) {
  require_simple(instance, table_cap);
  const unsigned n = instance.num_vars();
  CandidateTable table(n, table_cap);
  Counters counters;
  for (const auto& clause : instance.clauses()) {
    ++counters.rows_read;
    const Word blocked = complement_word(clause.sign, n);
    if (table.contains(blocked)) {
      table.remove(blocked);
      ++counters.removals;
    }
    if (table.removed_count() == table.size()) break;
  }
  SolutionSet solutions(n, table.members());
  return {std::move(solutions), std::move(table), counters};
}

Verdict solve_probabilistic(const Instance& instance, const ProbabilisticOptions& options) {
  require_simple(instance, options.table_cap);
  const unsigned n = instance.num_vars();
  const Circuit circuit(instance, options.table_cap);

  std::vector<Word> pool(Word{1} << n);
  std::iota(pool.begin(), pool.end(), Word{0});
  std::mt19937_64 rng(options.seed);

  Verdict v;
  v.augmented_rows = instance.num_clauses();
  while (!pool.empty()) {
    if (options.budget && v.counters.random_draws >= *options.budget) {
      v.status = Status::Exhausted;
      return v;
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    const Word k = pool[i];
    pool[i] = pool.back();
    pool.pop_back();
    ++v.counters.random_draws;
    if (eval_circuit(circuit, k, v.counters)) {
      v.status = Status::Sat;
      v.witness = Assignment(k, n);
      return v;
    }
  }
  v.status = Status::Unsat;
  return v;
}

} // namespace ssat
