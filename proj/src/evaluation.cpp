#include "ssat/evaluation.hpp"

#include <algorithm>
#include <bit>

namespace ssat {

PartialAssignment PartialAssignment::empty(unsigned n) {
  check_word_vars(n);
  return {0, 0, n};
}

PartialAssignment PartialAssignment::total(const Assignment& y) {
  return {full_mask(y.n), y.word, y.n};
}

unsigned PartialAssignment::free_count() const noexcept {
  return n - static_cast<unsigned>(std::popcount(fixed));
}

PartialAssignment PartialAssignment::with(unsigned i, bool value) const {
  if (i >= n) throw std::out_of_range("variable index out of range");
  const Word bit = Word{1} << i;
  PartialAssignment p = *this;
  p.fixed |= bit;
  p.values = value ? (p.values | bit) : (p.values & ~bit);
  return p;
}

bool eval_clauses(const Instance& instance, Word y) {
  for (const auto& c : instance.clauses())
    if (!eval_clause(c, y)) return false;
  return true;
}

Circuit::Circuit(const Instance& instance, unsigned table_cap) : instance_(&instance) {
  if (!instance.is_simple()) return;
  const unsigned n = instance.num_vars();
  if (n <= table_cap) {
    bitmap_.assign(((Word{1} << n) + 63) / 64, 0);
    for (const auto& c : instance.clauses()) {
      auto& w = bitmap_[c.sign >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (c.sign & 63);
      if (!(w & bit)) {
        w |= bit;
        distinct_.push_back(c.sign);
      }
    }
    std::sort(distinct_.begin(), distinct_.end());
  } else {
    distinct_ = instance.rows();
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
  }
}

bool Circuit::has_row(Word row) const {
  if (!bitmap_.empty()) return (bitmap_[row >> 6] >> (row & 63)) & 1U;
  return std::binary_search(distinct_.begin(), distinct_.end(), row);
}

bool Circuit::operator()(Word y) const {
  if (instance_->is_simple()) return !has_row(complement_word(y, num_vars()));
  return eval_clauses(*instance_, y);
}

bool eval_circuit(const Circuit& circuit, Word y, Counters& counters) {
  ++counters.evaluations;
  return circuit(y);
}

bool eval_circuit(const Instance& instance, const Assignment& y, Counters& counters) {
  if (y.n != instance.num_vars())
    throw std::invalid_argument("assignment width differs from instance");
  ++counters.evaluations;
  return eval_clauses(instance, y.word);
}

bool eval_matching(const Instance& instance, const Assignment& y, Counters& counters) {
  if (!instance.is_simple()) throw KindError("matching evaluation needs a Simple instance");
  if (y.n != instance.num_vars())
    throw std::invalid_argument("assignment width differs from instance");
  ++counters.evaluations;
  const unsigned n = instance.num_vars();
  bool all_rows = true;
  for (const auto& row : instance.clauses()) {
    bool matched = false;
    for (unsigned i = n; i-- > 0;) {
      if (((y.word >> i) & 1U) == ((row.sign >> i) & 1U)) matched = true;
    }
    all_rows = all_rows && matched;
  }
  return all_rows;
}

bool exists_completion_by_count(const Circuit& circuit, const PartialAssignment& p) {
  if (!circuit.instance().is_simple())
    throw KindError("counting backend needs a Simple instance");
  const unsigned n = circuit.num_vars();
  std::uint64_t blocked = 0;
  for (Word s : circuit.distinct_rows()) {
    const Word falsifier = complement_word(s, n);
    if (((falsifier ^ p.values) & p.fixed) == 0) ++blocked;
  }
  return blocked < (std::uint64_t{1} << p.free_count());
}

namespace {

bool search(const std::vector<TernaryClause>& clauses, Word fixed, Word values) {
  const TernaryClause* open = nullptr;
  for (const auto& c : clauses) {
    if ((~(values ^ c.sign) & c.present & fixed) != 0) continue;
    if ((c.present & ~fixed) == 0) return false;
    if (!open) open = &c;
  }
  if (!open) return true;
  const Word free_vars = open->present & ~fixed;
  const Word bit = Word{1} << (63 - std::countl_zero(free_vars));
  return search(clauses, fixed | bit, values & ~bit) ||
         search(clauses, fixed | bit, values | bit);
}

} // namespace

bool exists_completion_by_search(const Instance& instance, const PartialAssignment& p) {
  return search(instance.clauses(), p.fixed, p.values & p.fixed);
}

bool exists_completion(const Circuit& circuit, const PartialAssignment& p, Counters& counters) {
  if (p.n != circuit.num_vars())
    throw std::invalid_argument("partial assignment width differs from instance");
  ++counters.oracle_calls;
  if (circuit.instance().is_simple()) return exists_completion_by_count(circuit, p);
  return exists_completion_by_search(circuit.instance(), p);
}

} // namespace ssat
