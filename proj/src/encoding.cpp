#include "ssat/encoding.hpp"

namespace ssat {

TernaryClause parse_ternary(std::string_view digits, unsigned n) {
  check_word_vars(n);
  if (digits.size() != n)
    throw ParseError("ternary string '" + std::string(digits) + "' has length " +
                     std::to_string(digits.size()) + ", expected " + std::to_string(n));
  TernaryClause c;
  for (unsigned j = 0; j < n; ++j) {
    const Word bit = Word{1} << (n - 1 - j);
    switch (digits[j]) {
    case '0': c.present |= bit; break;
    case '1': c.present |= bit; c.sign |= bit; break;
    case '2': break;
    default:
      throw ParseError(std::string("foreign character '") + digits[j] +
                       "' in ternary string");
    }
  }
  if (c.present == 0)
    throw ParseError("ternary string '" + std::string(digits) + "' has no variable");
  return c;
}

std::string render_ternary(const TernaryClause& clause, unsigned n) {
  std::string s(n, '2');
  for (unsigned j = 0; j < n; ++j) {
    const Word bit = Word{1} << (n - 1 - j);
    if (clause.present & bit) s[j] = (clause.sign & bit) ? '1' : '0';
  }
  return s;
}

Assignment row_word(const TernaryClause& clause, unsigned n) {
  if (!clause.is_full_width(n))
    throw KindError("row_word needs a full-width clause, got " + render_ternary(clause, n));
  return {clause.sign, n};
}

Kind classify(const Instance& instance) {
  for (const auto& c : instance.clauses())
    if (!c.is_full_width(instance.num_vars())) return Kind::General;
  return Kind::Simple;
}

Instance augment_with_clause(const Instance& instance, const TernaryClause& clause) {
  auto clauses = instance.clauses();
  clauses.push_back(clause);
  return Instance(instance.num_vars(), std::move(clauses));
}

Instance augment_with_witness(const Instance& instance, const Assignment& y) {
  if (y.n != instance.num_vars())
    throw std::invalid_argument("witness width differs from instance");
  return augment_with_clause(instance, TernaryClause::full_row(y.word, y.n));
}

} // namespace ssat
