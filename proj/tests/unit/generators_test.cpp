#include "ssat/generators.hpp"

#include "brute_force.hpp"
#include "ssat/solvers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

using namespace ssat;

TEST(FromSolutionSet, ReproducesSsat32) {
  const auto inst = from_solution_set(SolutionSet(3, {0, 1, 4, 5, 6, 7}));
  EXPECT_EQ(inst.rows(), (std::vector<Word>{4, 5}));
  EXPECT_EQ(reference::brute_solutions(inst), (std::vector<Word>{0, 1, 4, 5, 6, 7}));
}

TEST(FromSolutionSet, Extremes) {
  EXPECT_EQ(from_solution_set(SolutionSet(4)).num_clauses(), 16U);
  EXPECT_TRUE(solve_board(from_solution_set(SolutionSet(4))).unsat());
  std::vector<Word> all(8);
  std::iota(all.begin(), all.end(), Word{0});
  EXPECT_EQ(from_solution_set(SolutionSet(3, all)).num_clauses(), 0U);
}

TEST(FromSolutionSet, SingleSolution) {
  const auto inst = from_solution_set(SolutionSet(3, {5}));
  EXPECT_EQ(inst.num_clauses(), 7U);
  EXPECT_EQ(enumerate_solutions(inst).solutions.members(), (std::vector<Word>{5}));
  EXPECT_EQ(reference::brute_solutions(inst), (std::vector<Word>{5}));
}

TEST(FromSolutionSet, RoundTripWithShuffles) {
  std::mt19937_64 rng(1);
  for (unsigned n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Word> members;
      for (Word z = 0; z < (Word{1} << n); ++z)
        if (rng() % 3 == 0) members.push_back(z);
      const SolutionSet s(n, members);
      const auto shuffled = trial % 2 ? std::optional<std::uint64_t>(rng()) : std::nullopt;
      const auto inst = from_solution_set(s, shuffled);
      auto rows = inst.rows();
      if (!shuffled) {
        ASSERT_TRUE(std::is_sorted(rows.begin(), rows.end()));
      }
      std::sort(rows.begin(), rows.end());
      ASSERT_EQ(std::adjacent_find(rows.begin(), rows.end()), rows.end());
      ASSERT_EQ(inst.num_clauses() + s.size(), Word{1} << n);
      ASSERT_EQ(enumerate_solutions(inst).solutions, s);
    }
  }
}

TEST(BlockedBoard, SmallBoards) {
  EXPECT_EQ(blocked_board(1).rows(), (std::vector<Word>{0, 1}));
  EXPECT_EQ(blocked_board(3).rows(), (std::vector<Word>{0b000, 0b111, 0b001, 0b110, 0b010,
                                                        0b101, 0b011, 0b100}));
}

TEST(BlockedBoard, PermutationInAddressOrder) {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto rows = blocked_board(n).rows();
    ASSERT_EQ(rows.size(), Word{1} << n);
    for (Word a = 0; a < rows.size(); ++a) ASSERT_EQ(board_address(rows[a], n), a);
  }
}

TEST(BlockedBoard, EverySolverSaysUnsat) {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto inst = blocked_board(n);
    EXPECT_TRUE(solve_board(inst).unsat());
    EXPECT_TRUE(solve_linked(inst).unsat());
    EXPECT_TRUE(enumerate_solutions(inst).solutions.empty());
    EXPECT_TRUE(solve_probabilistic(inst, {n, std::nullopt}).unsat());
  }
}

TEST(RandomInstance, Deterministic) {
  for (auto profile : {Profile::simple(), Profile::simple_distinct(), Profile::general(4)}) {
    EXPECT_EQ(random_instance(6, 40, 123, profile), random_instance(6, 40, 123, profile));
  }
  EXPECT_NE(random_instance(6, 40, 123, Profile::simple()),
            random_instance(6, 40, 124, Profile::simple()));
}

TEST(RandomInstance, EmptySimpleIsAllSat) {
  const auto inst = random_instance(5, 0, 1, Profile::simple());
  EXPECT_EQ(reference::brute_solutions(inst).size(), 32U);
}

TEST(RandomInstance, DistinctFullBoardIsUnsat) {
  const auto inst = random_instance(8, 256, 5, Profile::simple_distinct());
  std::set<Word> rows;
  for (Word r : inst.rows()) rows.insert(r);
  EXPECT_EQ(rows.size(), 256U);
  EXPECT_FALSE(reference::brute_sat(inst));
  EXPECT_THROW(random_instance(3, 9, 1, Profile::simple_distinct()), std::invalid_argument);
}

TEST(RandomInstance, GeneralWidths) {
  const auto inst = random_instance(10, 500, 77, Profile::general(4));
  std::set<int> widths;
  for (const auto& c : inst.clauses()) widths.insert(std::popcount(c.present));
  EXPECT_EQ(*widths.begin(), 1);
  EXPECT_EQ(*widths.rbegin(), 4);
}

TEST(UniqueSolution, HasExactlyOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = unique_solution_instance(6, seed);
    EXPECT_EQ(reference::brute_solutions(inst).size(), 1U);
  }
}

TEST(ComplementClosed, Structure) {
  const auto inst = complement_closed_instance(6, 20, 9);
  std::set<Word> rows;
  for (Word r : inst.rows()) rows.insert(r);
  EXPECT_EQ(rows.size(), 20U);
  for (Word r : rows) EXPECT_TRUE(rows.count(complement_word(r, 6)));
  EXPECT_THROW(complement_closed_instance(6, 3, 1), std::invalid_argument);
  EXPECT_THROW(complement_closed_instance(2, 6, 1), std::invalid_argument);
}
