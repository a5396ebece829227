#pragma once

#include "ssat/core.hpp"

#include <cstdint>
#include <optional>

namespace ssat {

/// Simple instance whose solution set is exactly S: its rows are
/// complement(z) for every z outside S, ascending unless a shuffle seed is
/// given.
Instance from_solution_set(const SolutionSet& solutions,
                           std::optional<std::uint64_t> shuffle_seed = std::nullopt,
                           unsigned table_cap = kDefaultTableCap);

/// All 2^n rows in board-address order: 0, ~0, 1, ~1, ...
Instance blocked_board(unsigned n, unsigned table_cap = kDefaultTableCap);

struct Profile {
  enum class Kind {
    Simple,         // rows drawn uniformly with replacement
    SimpleDistinct, // rows drawn without replacement (m <= 2^n)
    General,        // widths uniform in [1, max_width], signs uniform
  };
  Kind kind = Kind::Simple;
  unsigned max_width = 3;

  static Profile simple() { return {Kind::Simple, 0}; }
  static Profile simple_distinct() { return {Kind::SimpleDistinct, 0}; }
  static Profile general(unsigned max_width) { return {Kind::General, max_width}; }
};

Instance random_instance(unsigned n, std::size_t m, std::uint64_t seed, Profile profile);

/// Simple instance with one solution, drawn from the seed, rows shuffled.
Instance unique_solution_instance(unsigned n, std::uint64_t seed,
                                  unsigned table_cap = kDefaultTableCap);

/// Distinct rows closed under complement: m/2 pairs chosen from the seed,
/// emitted in shuffled order. Every row falsifies its partner, so no row is
/// itself a solution. Requires m even and m <= 2^n.
Instance complement_closed_instance(unsigned n, std::size_t m, std::uint64_t seed,
                                    unsigned table_cap = kDefaultTableCap);

} // namespace ssat
