#pragma once

// Witness extraction and unsatisfiability cross-checks driven by a decision
// oracle: a device that, given values for some variables, answers whether
// the rest can be completed to a solution. The honest oracle is
// exists_completion; any other backend can be plugged in.

#include "ssat/core.hpp"
#include "ssat/evaluation.hpp"
#include "ssat/verdict.hpp"

namespace ssat {

class DecisionOracle {
public:
  virtual ~DecisionOracle() = default;
  virtual unsigned num_vars() const = 0;
  virtual bool query(const PartialAssignment& p) = 0;
};

/// exists_completion over a fixed instance.
class CompletionOracle final : public DecisionOracle {
public:
  explicit CompletionOracle(const Instance& instance, unsigned table_cap = kDefaultTableCap)
      : circuit_(instance, table_cap) {}

  unsigned num_vars() const override { return circuit_.num_vars(); }
  bool query(const PartialAssignment& p) override {
    return exists_completion(circuit_, p, counters_);
  }

  const Circuit& circuit() const noexcept { return circuit_; }
  const Counters& counters() const noexcept { return counters_; }

private:
  Circuit circuit_;
  Counters counters_;
};

/// One query on the all-free assignment decides; then variables are fixed
/// from x_{n-1} down to x_0, trying 0 first and taking 1 without asking
/// when 0 is refused. Uses at most n + 1 queries and yields the smallest
/// satisfying assignment under an honest oracle.
///
/// `check` verifies the extracted witness; a failure throws std::logic_error.
Verdict extract_solution(DecisionOracle& oracle, const Circuit& check);
Verdict extract_solution(const Instance& instance, unsigned table_cap = kDefaultTableCap);

struct UnsatCheck {
  enum class Result { Consistent, Inconsistent, NotApplicable };
  Result result = Result::NotApplicable;
  /// The restriction that contradicted "no solution" (Inconsistent only).
  unsigned var = 0;
  bool value = false;
  Counters counters;
};

std::string_view to_string(UnsatCheck::Result result);

/// When the oracle says "no solution", re-asks with each single variable
/// fixed to 0 and to 1 (x_{n-1} first). Any yes contradicts the first
/// answer. At most 2n + 1 queries.
UnsatCheck verify_unsat(DecisionOracle& oracle);
UnsatCheck verify_unsat(const Instance& instance, unsigned table_cap = kDefaultTableCap);

} // namespace ssat
