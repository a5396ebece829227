#pragma once

#include "ssat/core.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ssat {

enum class Status { Sat, Unsat, Exhausted };

/// Where a witness came from. None covers witness-free answers and
/// randomly drawn witnesses.
enum class Source { None, Row, Residual, Oracle };

std::string_view to_string(Status status);
std::string_view to_string(Source source);

struct Verdict {
  Status status = Status::Unsat;
  std::optional<Assignment> witness;
  Source source = Source::None;
  Counters counters;
  /// Clause count of the instance the witness refers to: m, or m + 1 when a
  /// residual witness is reported against the augmented instance.
  std::size_t augmented_rows = 0;
  /// Filled board (address -> row) when a board run proves unsatisfiability.
  std::vector<Word> board;

  bool sat() const noexcept { return status == Status::Sat; }
  bool unsat() const noexcept { return status == Status::Unsat; }
};

} // namespace ssat
