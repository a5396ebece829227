#pragma once

// Text formats and result serialization.
//
// DIMACS CNF: "p cnf n m" header, clauses as signed 1-based literals ending
// in 0. Literal v > 0 is x_{v-1}, v < 0 its negation.
//
// tsat/ssat: header "tsat n m" or "ssat n m", then m lines of n digits each,
// leftmost digit x_{n-1}. tsat digits are 0/1/2 (2 = absent); ssat rows are
// binary and every clause lists all n variables.

#include "ssat/core.hpp"
#include "ssat/oracle.hpp"
#include "ssat/verdict.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ssat {

enum class Format { Dimacs, Tsat, Ssat };

std::string_view to_string(Format format);
Format parse_format(std::string_view name);

Instance read_dimacs(std::string_view text);
std::string write_dimacs(const Instance& instance);

Instance read_text(std::string_view text);
/// Throws KindError when asked for ssat on a General instance.
std::string write_text(const Instance& instance, Format flavor);

/// Picks the reader from the first non-comment token.
Format detect_format(std::string_view text);
Instance read_instance(std::string_view text);
std::string write_instance(const Instance& instance, Format format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

nlohmann::json counters_to_json(const Counters& counters);

/// {"status", "witness", "source", "counters", "augmented_rows"}; the
/// witness is an MSB-first binary string or null.
nlohmann::json verdict_to_json(const Verdict& verdict);
nlohmann::json unsat_check_to_json(const UnsatCheck& check, unsigned n);

} // namespace ssat
