#include "ssat/candidate_table.hpp"

#include <ostream>

namespace ssat {

CandidateTable::CandidateTable(unsigned n, unsigned table_cap) : n_(n) {
  check_table_vars(n, table_cap);
  if (n > 31) throw CapacityError("candidate table indices are 32-bit");
  const Word size = Word{1} << n;
  prev_.resize(size);
  next_.resize(size);
  member_.assign(size, 1);
  for (Word k = 0; k < size; ++k) {
    prev_[k] = k == 0 ? kNone : static_cast<Index>(k - 1);
    next_[k] = k + 1 == size ? kNone : static_cast<Index>(k + 1);
  }
  first_ = 0;
  last_ = size - 1;
}

void CandidateTable::check_index(Word k) const {
  if (k >= size()) throw std::out_of_range("candidate " + std::to_string(k) + " out of range");
}

bool CandidateTable::contains(Word k) const {
  check_index(k);
  return member_[k] != 0;
}

Word CandidateTable::next(Word k) const {
  check_index(k);
  return widen(next_[k]);
}

Word CandidateTable::prev(Word k) const {
  check_index(k);
  return widen(prev_[k]);
}

void CandidateTable::remove(Word k) {
  if (!contains(k))
    throw std::logic_error("candidate " + std::to_string(k) + " already removed");
  unsigned writes = 0;
  const Index p = prev_[k];
  const Index nx = next_[k];
  if (p != kNone) { next_[p] = nx; ++writes; }
  if (nx != kNone) { prev_[nx] = p; ++writes; }
  if (k == first_) { first_ = widen(nx); ++writes; }
  if (k == last_) { last_ = widen(p); ++writes; }
  next_[k] = kNone;
  prev_[k] = kNone;
  writes += 2;
  member_[k] = 0;
  ++removed_;
  last_writes_ = writes;
}

std::vector<Word> CandidateTable::members() const {
  std::vector<Word> out;
  out.reserve(remaining());
  for (Word k = first_; k != npos; k = widen(next_[k])) out.push_back(k);
  return out;
}

void CandidateTable::dump(std::ostream& out) const {
  auto show = [](Word v) { return v == npos ? std::string("-1") : std::to_string(v); };
  out << "first=" << show(first_) << "; last=" << show(last_) << '\n';
  for (Word k = first_; k != npos; k = widen(next_[k]))
    out << k << ' ' << show(widen(prev_[k])) << ' ' << show(widen(next_[k])) << '\n';
}

} // namespace ssat
