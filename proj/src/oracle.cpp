#include "ssat/oracle.hpp"

namespace ssat {

Verdict extract_solution(DecisionOracle& oracle, const Circuit& check) {
  const unsigned n = oracle.num_vars();
  Verdict v;
  v.augmented_rows = check.instance().num_clauses();

  auto p = PartialAssignment::empty(n);
  ++v.counters.oracle_calls;
  if (!oracle.query(p)) {
    v.status = Status::Unsat;
    return v;
  }
  for (unsigned i = n; i-- > 0;) {
    const auto zero = p.with(i, false);
    ++v.counters.oracle_calls;
    p = oracle.query(zero) ? zero : p.with(i, true);
  }

  if (!eval_circuit(check, p.values, v.counters))
    throw std::logic_error("internal error: extracted witness " +
                           Assignment(p.values, n).to_string() +
                           " does not satisfy the instance");
  v.status = Status::Sat;
  v.witness = Assignment(p.values, n);
  v.source = Source::Oracle;
  return v;
}

Verdict extract_solution(const Instance& instance, unsigned table_cap) {
  CompletionOracle oracle(instance, table_cap);
  return extract_solution(oracle, oracle.circuit());
}

std::string_view to_string(UnsatCheck::Result result) {
  switch (result) {
  case UnsatCheck::Result::Consistent: return "consistent";
  case UnsatCheck::Result::Inconsistent: return "inconsistent";
  case UnsatCheck::Result::NotApplicable: return "not-applicable";
  }
  return "?";
}

UnsatCheck verify_unsat(DecisionOracle& oracle) {
  const unsigned n = oracle.num_vars();
  const auto all_free = PartialAssignment::empty(n);
  UnsatCheck out;
  ++out.counters.oracle_calls;
  if (oracle.query(all_free)) {
    out.result = UnsatCheck::Result::NotApplicable;
    return out;
  }
  for (unsigned i = n; i-- > 0;) {
    for (bool value : {false, true}) {
      ++out.counters.oracle_calls;
      if (oracle.query(all_free.with(i, value))) {
        out.result = UnsatCheck::Result::Inconsistent;
        out.var = i;
        out.value = value;
        return out;
      }
    }
  }
  out.result = UnsatCheck::Result::Consistent;
  return out;
}

UnsatCheck verify_unsat(const Instance& instance, unsigned table_cap) {
  CompletionOracle oracle(instance, table_cap);
  return verify_unsat(oracle);
}

} // namespace ssat
