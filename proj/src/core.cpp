#include "ssat/core.hpp"

#include <algorithm>

namespace ssat {

void check_word_vars(unsigned n) {
  if (n < 1 || n > kMaxWordVars)
    throw CapacityError("variable count " + std::to_string(n) +
                        " outside [1, " + std::to_string(kMaxWordVars) + "]");
}

void check_table_vars(unsigned n, unsigned cap) {
  check_word_vars(n);
  if (n > cap)
    throw CapacityError("variable count " + std::to_string(n) +
                        " exceeds table cap " + std::to_string(cap));
}

Assignment::Assignment(Word w, unsigned vars) : word(w), n(vars) {
  check_word_vars(vars);
  if (w & ~full_mask(vars))
    throw std::invalid_argument("assignment has bits above position n-1");
}

std::string Assignment::to_string() const {
  std::string s(n, '0');
  for (unsigned j = 0; j < n; ++j)
    if (bit(n - 1 - j)) s[j] = '1';
  return s;
}

Assignment Assignment::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > kMaxWordVars)
    throw ParseError("binary string length out of range");
  Word w = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw ParseError(std::string("foreign character '") + c + "' in binary string");
    w = (w << 1) | Word(c == '1');
  }
  return {w, static_cast<unsigned>(bits.size())};
}

Assignment complement(const Assignment& y) {
  return {complement_word(y.word, y.n), y.n};
}

Assignment falsifying_assignment(const Assignment& row) { return complement(row); }

std::string_view to_string(Kind kind) {
  return kind == Kind::Simple ? "simple" : "general";
}

Instance::Instance(unsigned n, std::vector<TernaryClause> clauses)
    : n_(n), clauses_(std::move(clauses)), kind_(Kind::Simple) {
  check_word_vars(n);
  const Word m = full_mask(n);
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    const auto& c = clauses_[j];
    if (c.present == 0)
      throw std::invalid_argument("clause " + std::to_string(j) + " has no variable");
    if (c.present & ~m)
      throw std::invalid_argument("clause " + std::to_string(j) + " uses a variable >= n");
    if (c.sign & ~c.present)
      throw std::invalid_argument("clause " + std::to_string(j) + " is not canonical");
    if (c.present != m) kind_ = Kind::General;
  }
}

Instance Instance::from_rows(unsigned n, std::span<const Word> rows) {
  check_word_vars(n);
  std::vector<TernaryClause> clauses;
  clauses.reserve(rows.size());
  for (Word r : rows) {
    if (r & ~full_mask(n)) throw std::invalid_argument("row word exceeds n bits");
    clauses.push_back(TernaryClause::full_row(r, n));
  }
  return Instance(n, std::move(clauses));
}

std::vector<Word> Instance::rows() const {
  if (!is_simple()) throw KindError("row words need a Simple instance");
  std::vector<Word> out;
  out.reserve(clauses_.size());
  for (const auto& c : clauses_) out.push_back(c.sign);
  return out;
}

SolutionSet::SolutionSet(unsigned n, std::vector<Word> members)
    : n_(n), members_(std::move(members)) {
  check_word_vars(n);
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("solution set has duplicate members");
  if (!members_.empty() && members_.back() > full_mask(n))
    throw std::invalid_argument("solution set member exceeds n bits");
}

bool SolutionSet::contains(Word y) const {
  return std::binary_search(members_.begin(), members_.end(), y);
}

} // namespace ssat
