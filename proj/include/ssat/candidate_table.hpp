#pragma once

#include "ssat/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ssat {

/// Doubly-linked chain over every candidate in [0, 2^n - 1], kept in
/// ascending order. Removal is O(1); traversal visits the survivors only.
///
/// Membership is tracked with an explicit flag: the tail of the chain also
/// has no successor, so "next == none" cannot double as "removed".
class CandidateTable {
public:
  using Index = std::uint32_t;
  static constexpr Word npos = ~Word{0};

  explicit CandidateTable(unsigned n, unsigned table_cap = kDefaultTableCap);

  unsigned num_vars() const noexcept { return n_; }
  Word size() const noexcept { return Word{1} << n_; }
  Word removed_count() const noexcept { return removed_; }
  Word remaining() const noexcept { return size() - removed_; }

  bool contains(Word k) const;
  Word first() const noexcept { return first_; }
  Word last() const noexcept { return last_; }
  /// Links of a candidate; npos at the chain ends and for removed entries.
  Word next(Word k) const;
  Word prev(Word k) const;

  /// Unlinks k. Throws std::logic_error if k was already removed.
  void remove(Word k);

  /// Link/endpoint writes made by the most recent remove().
  unsigned last_remove_writes() const noexcept { return last_writes_; }

  /// Survivors in chain order.
  std::vector<Word> members() const;

  /// "first=F; last=L" then one "i previous next" line per member, with -1
  /// for a missing neighbour.
  void dump(std::ostream& out) const;

private:
  static constexpr Index kNone = ~Index{0};

  static Word widen(Index i) noexcept { return i == kNone ? npos : Word{i}; }
  void check_index(Word k) const;

  unsigned n_;
  std::vector<Index> prev_;
  std::vector<Index> next_;
  std::vector<std::uint8_t> member_;
  Word first_;
  Word last_;
  Word removed_ = 0;
  unsigned last_writes_ = 0;
};

} // namespace ssat
