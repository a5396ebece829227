#pragma once

#include "ssat/core.hpp"

#include <string>
#include <string_view>

namespace ssat {

/// Parses a ternary digit string. Text position j (0 = leftmost) is variable
/// x_{n-1-j}; '0' is a negative literal, '1' positive, '2' absent.
TernaryClause parse_ternary(std::string_view digits, unsigned n);

std::string render_ternary(const TernaryClause& clause, unsigned n);

/// The row's binary number; only defined for full-width clauses.
Assignment row_word(const TernaryClause& clause, unsigned n);

Kind classify(const Instance& instance);

/// Copy of `instance` with `clause` appended.
Instance augment_with_clause(const Instance& instance, const TernaryClause& clause);

/// Copy of `instance` with the full-width row whose digits are y's bits
/// appended, so y becomes one of the instance's own rows.
Instance augment_with_witness(const Instance& instance, const Assignment& y);

} // namespace ssat
