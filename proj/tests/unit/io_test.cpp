#include "ssat/io.hpp"

#include "brute_force.hpp"
#include "ssat/generators.hpp"
#include "ssat/solvers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ssat;

TEST(Dimacs, Sat43Example) {
  const auto inst = read_dimacs("c four variables\np cnf 4 4\n4 -3 1 0\n4 3 2 0\n-3 2 1 0\n1 0\n");
  EXPECT_EQ(inst, reference::sat_4_3());
  EXPECT_EQ(inst.kind(), Kind::General);
}

TEST(Dimacs, SingleUnitClauseIsSimple) {
  const auto inst = read_dimacs("p cnf 1 1\n1 0\n");
  EXPECT_TRUE(inst.is_simple());
  EXPECT_EQ(inst.rows(), (std::vector<Word>{1}));
}

TEST(Dimacs, ClausesMaySpanLines) {
  const auto inst = read_dimacs("p cnf 3 2\n1 -2\n 3 0 -1\n0\n");
  EXPECT_EQ(inst.num_clauses(), 2U);
  EXPECT_EQ(render_ternary(inst.clauses()[0], 3), "101");
  EXPECT_EQ(render_ternary(inst.clauses()[1], 3), "220");
}

TEST(Dimacs, Rejects) {
  EXPECT_THROW(read_dimacs("p cnf 2 1\n0\n"), ParseError);        // empty clause
  EXPECT_THROW(read_dimacs("p cnf 2 1\n1 -1 0\n"), ParseError);   // x and not x
  EXPECT_THROW(read_dimacs("p cnf 2 1\n3 0\n"), ParseError);      // variable out of range
  EXPECT_THROW(read_dimacs("p cnf 2 1\n1 2\n"), ParseError);      // unterminated
  EXPECT_THROW(read_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);    // count mismatch
  EXPECT_THROW(read_dimacs("1 2 0\n"), ParseError);               // no header
  EXPECT_THROW(read_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);    // junk
  EXPECT_THROW(read_dimacs("p cnf 64 0\n"), ParseError);       // too many variables
}

TEST(Dimacs, DuplicateLiteralsMerge) {
  const auto inst = read_dimacs("p cnf 2 1\n2 2 -1 0\n");
  EXPECT_EQ(render_ternary(inst.clauses()[0], 2), "10");
}

TEST(Dimacs, WriteFormat) {
  EXPECT_EQ(write_dimacs(reference::ssat_3_2()), "p cnf 3 2\n3 -2 1 0\n3 -2 -1 0\n");
}

TEST(Text, TsatAndSsat) {
  EXPECT_EQ(read_text("tsat 4 4\n1021\n1112\n2011\n2221\n"), reference::sat_4_3());
  EXPECT_EQ(read_text("ssat 3 2\n101\n100\n\n"), reference::ssat_3_2());
  EXPECT_EQ(write_text(reference::ssat_3_2(), Format::Ssat), "ssat 3 2\n101\n100\n");
  EXPECT_EQ(write_text(reference::sat_4_3(), Format::Tsat), "tsat 4 4\n1021\n1112\n2011\n2221\n");
  EXPECT_THROW(write_text(reference::sat_4_3(), Format::Ssat), KindError);
}

TEST(Text, Rejects) {
  EXPECT_THROW(read_text("tsat 3 1\n222\n"), ParseError);
  EXPECT_THROW(read_text("ssat 3 1\n102\n"), ParseError);
  EXPECT_THROW(read_text("tsat 3 1\n10\n"), ParseError);
  EXPECT_THROW(read_text("tsat 3 2\n101\n"), ParseError);
  EXPECT_THROW(read_text("tsat 3 1\n101\n111\n"), ParseError);
  EXPECT_THROW(read_text("tsat 3 1\n1a1\n"), ParseError);
  EXPECT_THROW(read_text("xsat 3 1\n101\n"), ParseError);
}

TEST(Formats, DetectAndName) {
  EXPECT_EQ(detect_format("c hi\np cnf 1 0\n"), Format::Dimacs);
  EXPECT_EQ(detect_format("tsat 1 0\n"), Format::Tsat);
  EXPECT_EQ(detect_format("ssat 1 0\n"), Format::Ssat);
  EXPECT_EQ(parse_format("cnf"), Format::Dimacs);
  EXPECT_EQ(to_string(Format::Tsat), "tsat");
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  EXPECT_THROW(read_instance(""), ParseError);
}

TEST(Formats, RoundTripFuzz) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + rng() % 16;
    const bool general = trial % 2;
    const auto inst = general ? random_instance(n, rng() % 40, rng(), Profile::general(1 + rng() % n))
                              : random_instance(n, rng() % 40, rng(), Profile::simple());
    ASSERT_EQ(read_instance(write_dimacs(inst)), inst);
    ASSERT_EQ(read_instance(write_text(inst, Format::Tsat)), inst);
    if (inst.is_simple()) {
      ASSERT_EQ(read_instance(write_text(inst, Format::Ssat)), inst);
    }
  }
}

TEST(Json, VerdictShape) {
  const auto inst = reference::ssat_3_2();
  const auto v = solve_linked(inst);
  const auto j = verdict_to_json(v);
  EXPECT_EQ(j["status"], "sat");
  EXPECT_EQ(j["witness"], "101");
  EXPECT_EQ(j["source"], "row");
  EXPECT_EQ(j["augmented_rows"], 2);
  EXPECT_EQ(j["counters"]["rows_read"], 1);
  const auto w = Assignment::parse(j["witness"].get<std::string>());
  EXPECT_TRUE(reference::brute_eval(read_instance(write_dimacs(inst)), w.word));

  const auto u = verdict_to_json(solve_linked(blocked_board(2)));
  EXPECT_EQ(u["status"], "unsat");
  EXPECT_TRUE(u["witness"].is_null());
}

TEST(Json, UnsatCheckShape) {
  const auto j = unsat_check_to_json(verify_unsat(blocked_board(2)), 2);
  EXPECT_EQ(j["result"], "consistent");
  EXPECT_EQ(j["counters"]["oracle_calls"], 5);
}
