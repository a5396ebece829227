#include "ssat/candidate_table.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace ssat;

namespace {

std::string dump(const CandidateTable& t) {
  std::ostringstream s;
  t.dump(s);
  return s.str();
}

void expect_consistent(const CandidateTable& t) {
  const auto members = t.members();
  ASSERT_EQ(members.size(), t.remaining());
  ASSERT_TRUE(std::is_sorted(members.begin(), members.end()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Word k = members[i];
    ASSERT_TRUE(t.contains(k));
    ASSERT_EQ(t.prev(k), i == 0 ? CandidateTable::npos : members[i - 1]);
    ASSERT_EQ(t.next(k), i + 1 == members.size() ? CandidateTable::npos : members[i + 1]);
  }
  if (!members.empty()) {
    ASSERT_EQ(t.last(), members.back());
  }
  for (Word k = 0; k < t.size(); ++k) {
    if (!t.contains(k)) {
      ASSERT_EQ(t.prev(k), CandidateTable::npos);
      ASSERT_EQ(t.next(k), CandidateTable::npos);
    }
  }
}

} // namespace

TEST(CandidateTable, FreshTableMatchesInitialLayout) {
  CandidateTable t(3);
  EXPECT_EQ(t.first(), 0U);
  EXPECT_EQ(t.last(), 7U);
  EXPECT_EQ(t.removed_count(), 0U);
  EXPECT_EQ(dump(t), "first=0; last=7\n"
                     "0 -1 1\n1 0 2\n2 1 3\n3 2 4\n4 3 5\n5 4 6\n6 5 7\n7 6 -1\n");
}

TEST(CandidateTable, SingleVariable) {
  CandidateTable t(1);
  EXPECT_EQ(t.members(), (std::vector<Word>{0, 1}));
  EXPECT_EQ(t.next(0), 1U);
}

TEST(CandidateTable, TraversalOfFreshTable) {
  CandidateTable t(4);
  std::vector<Word> expected(16);
  std::iota(expected.begin(), expected.end(), Word{0});
  EXPECT_EQ(t.members(), expected);
}

TEST(CandidateTable, RemovingTwoAndThreeGivesResultingTable) {
  CandidateTable t(3);
  t.remove(2);
  t.remove(3);
  EXPECT_EQ(t.members(), (std::vector<Word>{0, 1, 4, 5, 6, 7}));
  EXPECT_FALSE(t.contains(2));
  EXPECT_TRUE(t.contains(4));
  EXPECT_EQ(dump(t), "first=0; last=7\n0 -1 1\n1 0 4\n4 1 5\n5 4 6\n6 5 7\n7 6 -1\n");
  expect_consistent(t);
}

TEST(CandidateTable, EndpointRemoval) {
  CandidateTable t(3);
  t.remove(0);
  EXPECT_EQ(t.first(), 1U);
  EXPECT_EQ(t.prev(1), CandidateTable::npos);
  t.remove(7);
  EXPECT_EQ(t.last(), 6U);
  EXPECT_EQ(t.next(6), CandidateTable::npos);
  // The tail is still a member even though it has no successor.
  EXPECT_TRUE(t.contains(6));
  expect_consistent(t);
}

TEST(CandidateTable, RemoveEverything) {
  CandidateTable t(3);
  for (Word k = 0; k < 8; ++k) t.remove(k);
  EXPECT_EQ(t.removed_count(), 8U);
  EXPECT_EQ(t.first(), CandidateTable::npos);
  EXPECT_EQ(t.last(), CandidateTable::npos);
  EXPECT_TRUE(t.members().empty());
}

TEST(CandidateTable, DoubleRemoveIsAnError) {
  CandidateTable t(2);
  t.remove(1);
  EXPECT_THROW(t.remove(1), std::logic_error);
  EXPECT_THROW(t.contains(4), std::out_of_range);
}

TEST(CandidateTable, RandomRemovalSequences) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + rng() % 12;
    CandidateTable t(n);
    std::vector<Word> order(t.size());
    std::iota(order.begin(), order.end(), Word{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t r = rng() % (order.size() + 1);
    for (std::size_t i = 0; i < r; ++i) {
      t.remove(order[i]);
      ASSERT_LE(t.last_remove_writes(), 8U);
    }
    std::vector<Word> survivors(order.begin() + static_cast<std::ptrdiff_t>(r), order.end());
    std::sort(survivors.begin(), survivors.end());
    ASSERT_EQ(t.members(), survivors);
    ASSERT_EQ(t.removed_count() + t.remaining(), t.size());
    ASSERT_EQ(t.first(), survivors.empty() ? CandidateTable::npos : survivors.front());
    expect_consistent(t);
  }
}

TEST(CandidateTable, CapIsEnforced) {
  EXPECT_THROW(CandidateTable(27), CapacityError);
  EXPECT_THROW(CandidateTable(5, 4), CapacityError);
}
