#pragma once

// Value types shared by every ssat module: bit-word assignments, ternary
// clauses, instances, solution sets and run counters.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <span>
#include <vector>

namespace ssat {

using Word = std::uint64_t;

/// Largest variable count representable in a single word.
inline constexpr unsigned kMaxWordVars = 63;

/// Default cap for algorithms that allocate one slot per candidate (2^n).
inline constexpr unsigned kDefaultTableCap = 26;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (DIMACS, tsat/ssat, ternary digit strings).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Variable count beyond what a word or a 2^n table can hold.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// The operation requires a full-width (Simple) instance.
class KindError : public Error {
public:
  using Error::Error;
};

inline constexpr Word full_mask(unsigned n) noexcept {
  return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

/// Throws CapacityError unless 1 <= n <= kMaxWordVars.
void check_word_vars(unsigned n);

/// Throws CapacityError unless 1 <= n <= cap.
void check_table_vars(unsigned n, unsigned cap = kDefaultTableCap);

/// An n-bit word; bit i holds x_i, so the MSB is x_{n-1} and the text form
/// reads left to right from x_{n-1} down to x_0.
struct Assignment {
  Word word = 0;
  unsigned n = 1;

  Assignment() = default;
  Assignment(Word w, unsigned vars);

  bool bit(unsigned i) const noexcept { return (word >> i) & 1U; }

  /// MSB-first binary string, e.g. "010" for x_1 = 1 with n = 3.
  std::string to_string() const;
  static Assignment parse(std::string_view bits);

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

inline constexpr Word complement_word(Word y, unsigned n) noexcept {
  return ~y & full_mask(n);
}

Assignment complement(const Assignment& y);

/// A full-width row s is falsified only by complement(s).
Assignment falsifying_assignment(const Assignment& row);

/// One CNF clause as two masks. Digit 0 is present & !sign, digit 1 is
/// present & sign, digit 2 is !present.
struct TernaryClause {
  Word present = 0;
  Word sign = 0;

  bool is_full_width(unsigned n) const noexcept { return present == full_mask(n); }

  static TernaryClause full_row(Word row, unsigned n) noexcept {
    return {full_mask(n), row & full_mask(n)};
  }

  friend bool operator==(const TernaryClause&, const TernaryClause&) = default;
};

enum class Kind { Simple, General };

std::string_view to_string(Kind kind);

/// A general SAT instance, or a Simple one when every clause lists all n
/// variables. Clause order and duplicates are preserved as given.
class Instance {
public:
  Instance(unsigned n, std::vector<TernaryClause> clauses);

  /// Simple instance from row words.
  static Instance from_rows(unsigned n, std::span<const Word> rows);

  unsigned num_vars() const noexcept { return n_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }
  const std::vector<TernaryClause>& clauses() const noexcept { return clauses_; }
  Kind kind() const noexcept { return kind_; }
  bool is_simple() const noexcept { return kind_ == Kind::Simple; }
  Word mask() const noexcept { return full_mask(n_); }

  /// Row words of a Simple instance, in clause order.
  std::vector<Word> rows() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.clauses_ == b.clauses_;
  }

private:
  unsigned n_;
  std::vector<TernaryClause> clauses_;
  Kind kind_;
};

/// A sorted set of assignments over n variables.
class SolutionSet {
public:
  explicit SolutionSet(unsigned n) : n_(n) {}
  /// Throws std::invalid_argument on out-of-range or duplicate members.
  SolutionSet(unsigned n, std::vector<Word> members);

  unsigned num_vars() const noexcept { return n_; }
  const std::vector<Word>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Word y) const;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

private:
  unsigned n_;
  std::vector<Word> members_;
};

struct Counters {
  std::uint64_t rows_read = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t removals = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t random_draws = 0;

  Counters& operator+=(const Counters& o) noexcept {
    rows_read += o.rows_read;
    evaluations += o.evaluations;
    removals += o.removals;
    oracle_calls += o.oracle_calls;
    random_draws += o.random_draws;
    return *this;
  }

  friend bool operator==(const Counters&, const Counters&) = default;
};

} // namespace ssat
