#include "ssat/oracle.hpp"

#include "brute_force.hpp"
#include "ssat/generators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ssat;

namespace {

/// Honest except that it answers "no" to the unrestricted query.
class DeniesTopLevel final : public DecisionOracle {
public:
  explicit DeniesTopLevel(const Instance& instance) : honest_(instance) {}
  unsigned num_vars() const override { return honest_.num_vars(); }
  bool query(const PartialAssignment& p) override {
    if (p.fixed == 0) return false;
    return honest_.query(p);
  }

private:
  CompletionOracle honest_;
};

/// Says yes to everything.
class AlwaysYes final : public DecisionOracle {
public:
  explicit AlwaysYes(unsigned n) : n_(n) {}
  unsigned num_vars() const override { return n_; }
  bool query(const PartialAssignment&) override { return true; }

private:
  unsigned n_;
};

} // namespace

TEST(ExtractSolution, Ssat32PrefersZero) {
  const auto v = extract_solution(reference::ssat_3_2());
  ASSERT_TRUE(v.sat());
  EXPECT_EQ(v.witness->to_string(), "000");
  EXPECT_EQ(v.source, Source::Oracle);
  EXPECT_EQ(v.counters.oracle_calls, 4U);
}

TEST(ExtractSolution, BlockedBoardStopsAfterOneCall) {
  const auto v = extract_solution(reference::rows_of({"00", "01", "10", "11"}));
  EXPECT_TRUE(v.unsat());
  EXPECT_EQ(v.counters.oracle_calls, 1U);
}

TEST(ExtractSolution, Sat53WitnessEvaluatesTrue) {
  const auto inst = reference::sat_5_3();
  const auto v = extract_solution(inst);
  ASSERT_TRUE(v.sat());
  EXPECT_TRUE(reference::brute_eval(inst, v.witness->word));
  EXPECT_LE(v.counters.oracle_calls, 6U);
}

TEST(ExtractSolution, ReturnsSmallestSolutionWithinCallBound) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + rng() % 12;
    const auto inst =
        trial % 2 ? random_instance(n, rng() % ((std::size_t{1} << n) + 1), rng(), Profile::simple())
                  : random_instance(n, rng() % (5 * n + 1), rng(), Profile::general(3));
    const auto truth = reference::brute_solutions(inst);
    const auto v = extract_solution(inst);
    ASSERT_EQ(v.sat(), !truth.empty());
    if (v.sat()) {
      ASSERT_EQ(v.witness->word, truth.front());
      ASSERT_EQ(v.counters.oracle_calls, n + 1);
    } else {
      ASSERT_EQ(v.counters.oracle_calls, 1U);
    }
  }
}

TEST(ExtractSolution, LyingOracleIsCaught) {
  const auto inst = reference::rows_of({"00", "01", "10", "11"});
  AlwaysYes liar(2);
  const Circuit check(inst);
  EXPECT_THROW(extract_solution(liar, check), std::logic_error);
}

TEST(VerifyUnsat, BlockedBoardIsConsistent) {
  const auto c = verify_unsat(reference::rows_of({"00", "01", "10", "11"}));
  EXPECT_EQ(c.result, UnsatCheck::Result::Consistent);
  EXPECT_EQ(c.counters.oracle_calls, 5U);
}

TEST(VerifyUnsat, SatisfiableIsNotApplicable) {
  const auto c = verify_unsat(reference::ssat_3_2());
  EXPECT_EQ(c.result, UnsatCheck::Result::NotApplicable);
  EXPECT_EQ(c.counters.oracle_calls, 1U);
}

TEST(VerifyUnsat, FaultyBackendIsInconsistent) {
  const auto inst = reference::ssat_3_2();
  DeniesTopLevel faulty(inst);
  const auto c = verify_unsat(faulty);
  EXPECT_EQ(c.result, UnsatCheck::Result::Inconsistent);
  EXPECT_EQ(c.var, 2U);
  EXPECT_FALSE(c.value);
  EXPECT_EQ(c.counters.oracle_calls, 2U);
}

TEST(VerifyUnsat, HonestBackendNeverInconsistent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + rng() % 10;
    const auto inst = from_solution_set(SolutionSet(n), rng());
    const auto c = verify_unsat(inst);
    ASSERT_EQ(c.result, UnsatCheck::Result::Consistent);
    ASSERT_EQ(c.counters.oracle_calls, 2 * n + 1);
  }
  int general_unsat = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + rng() % 8;
    const auto inst = random_instance(n, 8 * n, rng(), Profile::general(2));
    const auto c = verify_unsat(inst);
    ASSERT_NE(c.result, UnsatCheck::Result::Inconsistent);
    ASSERT_EQ(c.result == UnsatCheck::Result::Consistent, !reference::brute_sat(inst));
    ASSERT_LE(c.counters.oracle_calls, 2 * n + 1);
    general_unsat += c.result == UnsatCheck::Result::Consistent;
  }
  EXPECT_GT(general_unsat, 0);
}
