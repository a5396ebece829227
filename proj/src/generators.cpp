#include "ssat/generators.hpp"

#include "ssat/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ssat {

Instance from_solution_set(const SolutionSet& solutions,
                           std::optional<std::uint64_t> shuffle_seed, unsigned table_cap) {
  const unsigned n = solutions.num_vars();
  check_table_vars(n, table_cap);
  const Word size = Word{1} << n;
  std::vector<Word> rows;
  rows.reserve(size - solutions.size());
  // z ascending gives complement(z) descending; collect then reverse.
  auto next_member = solutions.members().begin();
  const auto end = solutions.members().end();
  for (Word z = 0; z < size; ++z) {
    if (next_member != end && *next_member == z) {
      ++next_member;
      continue;
    }
    rows.push_back(complement_word(z, n));
  }
  std::reverse(rows.begin(), rows.end());
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(rows.begin(), rows.end(), rng);
  }
  return Instance::from_rows(n, rows);
}

Instance blocked_board(unsigned n, unsigned table_cap) {
  check_table_vars(n, table_cap);
  const Word size = Word{1} << n;
  std::vector<Word> rows(size);
  for (Word a = 0; a < size; ++a) rows[a] = board_row(a, n);
  return Instance::from_rows(n, rows);
}

Instance random_instance(unsigned n, std::size_t m, std::uint64_t seed, Profile profile) {
  check_word_vars(n);
  std::mt19937_64 rng(seed);
  const Word mask = full_mask(n);

  switch (profile.kind) {
  case Profile::Kind::Simple: {
    std::uniform_int_distribution<Word> row(0, mask);
    std::vector<Word> rows(m);
    for (auto& r : rows) r = row(rng);
    return Instance::from_rows(n, rows);
  }
  case Profile::Kind::SimpleDistinct: {
    check_table_vars(n);
    if (m > (Word{1} << n)) throw std::invalid_argument("more distinct rows than words");
    std::vector<Word> all(Word{1} << n);
    std::iota(all.begin(), all.end(), Word{0});
    // Partial Fisher-Yates: the first m slots become a uniform sample.
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    all.resize(m);
    return Instance::from_rows(n, all);
  }
  case Profile::Kind::General: {
    const unsigned max_width = std::clamp(profile.max_width, 1U, n);
    std::uniform_int_distribution<unsigned> width(1, max_width);
    std::bernoulli_distribution coin(0.5);
    std::vector<unsigned> vars(n);
    std::vector<TernaryClause> clauses;
    clauses.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      std::iota(vars.begin(), vars.end(), 0U);
      const unsigned w = width(rng);
      TernaryClause c;
      for (unsigned i = 0; i < w; ++i) {
        std::uniform_int_distribution<unsigned> pick(i, n - 1);
        std::swap(vars[i], vars[pick(rng)]);
        const Word bit = Word{1} << vars[i];
        c.present |= bit;
        if (coin(rng)) c.sign |= bit;
      }
      clauses.push_back(c);
    }
    return Instance(n, std::move(clauses));
  }
  }
  throw std::invalid_argument("unknown profile");
}

Instance unique_solution_instance(unsigned n, std::uint64_t seed, unsigned table_cap) {
  check_table_vars(n, table_cap);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Word> pick(0, full_mask(n));
  const Word solution = pick(rng);
  return from_solution_set(SolutionSet(n, {solution}), rng(), table_cap);
}

Instance complement_closed_instance(unsigned n, std::size_t m, std::uint64_t seed,
                                    unsigned table_cap) {
  check_table_vars(n, table_cap);
  if (m % 2 != 0 || m > (Word{1} << n))
    throw std::invalid_argument("complement-closed instance needs even m <= 2^n");
  std::mt19937_64 rng(seed);
  // Pair representatives are the words with x_{n-1} = 0.
  std::vector<Word> reps(Word{1} << (n - 1));
  std::iota(reps.begin(), reps.end(), Word{0});
  std::shuffle(reps.begin(), reps.end(), rng);
  std::vector<Word> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m / 2; ++i) {
    rows.push_back(reps[i]);
    rows.push_back(complement_word(reps[i], n));
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  return Instance::from_rows(n, rows);
}

} // namespace ssat
