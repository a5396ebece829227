#pragma once

#include "ssat/core.hpp"

#include <vector>

namespace ssat {

/// Variables in `fixed` carry the matching bit of `values`; the rest are free.
struct PartialAssignment {
  Word fixed = 0;
  Word values = 0;
  unsigned n = 1;

  static PartialAssignment empty(unsigned n);
  static PartialAssignment total(const Assignment& y);

  bool is_total() const noexcept { return fixed == full_mask(n); }
  unsigned free_count() const noexcept;
  bool is_fixed(unsigned i) const noexcept { return (fixed >> i) & 1U; }

  /// Copy with x_i fixed to `value`.
  PartialAssignment with(unsigned i, bool value) const;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
};

inline bool eval_clause(const TernaryClause& clause, Word y) noexcept {
  return (~(y ^ clause.sign) & clause.present) != 0;
}

/// Clause-by-clause AND, no preprocessing.
bool eval_clauses(const Instance& instance, Word y);

/// The instance compiled for repeated evaluation. Simple instances get a
/// membership index over their distinct rows (dense bitmap when n fits the
/// table cap, sorted vector otherwise), so evaluating y is one lookup of
/// complement(y). General instances are evaluated clause by clause.
///
/// Holds a reference: the instance must outlive the circuit.
class Circuit {
public:
  explicit Circuit(const Instance& instance, unsigned table_cap = kDefaultTableCap);

  const Instance& instance() const noexcept { return *instance_; }
  unsigned num_vars() const noexcept { return instance_->num_vars(); }

  bool operator()(Word y) const;

  /// True when `row` is one of the instance's rows (Simple only).
  bool has_row(Word row) const;

  /// Sorted distinct row words (Simple only; empty for General).
  const std::vector<Word>& distinct_rows() const noexcept { return distinct_; }

private:
  const Instance* instance_;
  std::vector<Word> distinct_;
  std::vector<std::uint64_t> bitmap_;
};

/// Full-circuit evaluation; one evaluation in the counters whatever m is.
bool eval_circuit(const Circuit& circuit, Word y, Counters& counters);
bool eval_circuit(const Instance& instance, const Assignment& y, Counters& counters);

/// Digit-by-digit matching: every row must agree with y in some digit.
/// Compares all m*n digit pairs; throws KindError for General instances.
bool eval_matching(const Instance& instance, const Assignment& y, Counters& counters);

/// Whether some total extension of p satisfies the instance. Dispatches on
/// the instance kind and counts one oracle call.
bool exists_completion(const Circuit& circuit, const PartialAssignment& p, Counters& counters);

/// Simple backend: counts distinct rows whose falsifying assignment is
/// compatible with p and compares against the 2^free completions.
bool exists_completion_by_count(const Circuit& circuit, const PartialAssignment& p);

/// Branch-and-prune search over the free variables; works for any kind.
bool exists_completion_by_search(const Instance& instance, const PartialAssignment& p);

} // namespace ssat
