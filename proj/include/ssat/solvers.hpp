#pragma once

// Deterministic and probabilistic solvers for full-width (Simple) instances.
// All of them read rows in the order given and report their work through
// Counters so the cost claims can be checked against actual runs.

#include "ssat/candidate_table.hpp"
#include "ssat/core.hpp"
#include "ssat/verdict.hpp"

#include <cstdint>
#include <optional>

namespace ssat {

/// Board slot of row k: a word and its complement land on adjacent slots,
/// the one with MSB 0 first.
Word board_address(Word k, unsigned n);

/// Inverse of board_address.
Word board_row(Word address, unsigned n);

/// Places every distinct row on its board slot. Unsat once all 2^n slots are
/// filled (the board is returned as evidence); otherwise Sat without a
/// witness.
Verdict solve_board(const Instance& instance, unsigned table_cap = kDefaultTableCap);

/// Walks the rows against a candidate table. A row that satisfies the
/// instance is returned immediately; otherwise the row and its complement
/// are both non-solutions and are unlinked. If the rows run out first, the
/// smallest surviving candidate is a solution, and also a row of the
/// instance augmented with it.
Verdict solve_linked(const Instance& instance, unsigned table_cap = kDefaultTableCap);

struct Enumeration {
  SolutionSet solutions;
  CandidateTable table;
  Counters counters;
};

/// Removes complement(k) for every row k; the survivors are exactly the
/// satisfying assignments.
Enumeration enumerate_solutions(const Instance& instance,
                                unsigned table_cap = kDefaultTableCap);

struct ProbabilisticOptions {
  std::uint64_t seed = 0;
  /// Maximum number of draws; unbounded when empty.
  std::optional<std::uint64_t> budget;
  unsigned table_cap = kDefaultTableCap;
};

/// Draws untested candidates uniformly without replacement until one
/// satisfies the instance or none remain.
Verdict solve_probabilistic(const Instance& instance, const ProbabilisticOptions& options);

} // namespace ssat
