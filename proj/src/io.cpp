#include "ssat/io.hpp"

#include "ssat/encoding.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace ssat {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'");
  return value;
}

unsigned parse_var_count(std::string_view token) {
  const auto n = parse_number<unsigned long>(token, "variable count");
  if (n < 1 || n > kMaxWordVars)
    throw ParseError("variable count " + std::string(token) + " outside [1, " +
                     std::to_string(kMaxWordVars) + "]");
  return static_cast<unsigned>(n);
}

bool is_comment(std::string_view line) {
  auto tokens = split_ws(line);
  return !tokens.empty() && tokens.front() == "c";
}

} // namespace

std::string_view to_string(Format format) {
  switch (format) {
  case Format::Dimacs: return "dimacs";
  case Format::Tsat: return "tsat";
  case Format::Ssat: return "ssat";
  }
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "dimacs" || name == "cnf") return Format::Dimacs;
  if (name == "tsat") return Format::Tsat;
  if (name == "ssat") return Format::Ssat;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Instance read_dimacs(std::string_view text) {
  std::optional<unsigned> n;
  std::size_t declared = 0;
  std::vector<TernaryClause> clauses;
  TernaryClause current;
  bool open = false;

  for (auto line : split_lines(text)) {
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front() == "c" || tokens.front().front() == 'c') continue;
    if (tokens.front() == "p") {
      if (n) throw ParseError("second DIMACS header");
      if (tokens.size() != 4 || tokens[1] != "cnf")
        throw ParseError("bad DIMACS header '" + std::string(line) + "'");
      n = parse_var_count(tokens[2]);
      declared = parse_number<std::size_t>(tokens[3], "clause count");
      continue;
    }
    if (!n) throw ParseError("clause before DIMACS header");
    for (auto tok : tokens) {
      const auto lit = parse_number<long long>(tok, "literal");
      if (lit == 0) {
        if (!open) throw ParseError("empty clause (a clause needs at least one variable)");
        clauses.push_back(current);
        current = {};
        open = false;
        continue;
      }
      const auto var = static_cast<unsigned long long>(lit < 0 ? -lit : lit);
      if (var > *n)
        throw ParseError("literal " + std::string(tok) + " exceeds variable count");
      const Word bit = Word{1} << (var - 1);
      const bool positive = lit > 0;
      if ((current.present & bit) && (((current.sign & bit) != 0) != positive))
        throw ParseError("variable " + std::to_string(var) +
                         " occurs with both signs in one clause");
      current.present |= bit;
      if (positive) current.sign |= bit;
      open = true;
    }
  }
  if (!n) throw ParseError("missing DIMACS header");
  if (open) throw ParseError("last clause is not terminated by 0");
  if (clauses.size() != declared)
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(clauses.size()));
  return Instance(*n, std::move(clauses));
}

std::string write_dimacs(const Instance& instance) {
  const unsigned n = instance.num_vars();
  std::string out = "p cnf " + std::to_string(n) + " " +
                    std::to_string(instance.num_clauses()) + "\n";
  for (const auto& c : instance.clauses()) {
    for (unsigned i = n; i-- > 0;) {
      const Word bit = Word{1} << i;
      if (!(c.present & bit)) continue;
      if (!(c.sign & bit)) out += '-';
      out += std::to_string(i + 1);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

Instance read_text(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t at = 0;
  while (at < lines.size() && split_ws(lines[at]).empty()) ++at;
  if (at == lines.size()) throw ParseError("empty input");

  auto header = split_ws(lines[at++]);
  if (header.size() != 3 || (header[0] != "tsat" && header[0] != "ssat"))
    throw ParseError("bad header, expected 'tsat n m' or 'ssat n m'");
  const bool binary = header[0] == "ssat";
  const unsigned n = parse_var_count(header[1]);
  const auto m = parse_number<std::size_t>(header[2], "clause count");

  std::vector<TernaryClause> clauses;
  clauses.reserve(m);
  for (; at < lines.size() && clauses.size() < m; ++at) {
    const auto line = lines[at];
    if (binary && line.find('2') != std::string_view::npos)
      throw ParseError("digit 2 in ssat row " + std::to_string(clauses.size() + 1));
    clauses.push_back(parse_ternary(line, n));
  }
  if (clauses.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " rows, found " +
                     std::to_string(clauses.size()));
  for (; at < lines.size(); ++at)
    if (!split_ws(lines[at]).empty()) throw ParseError("more rows than the header declares");
  return Instance(n, std::move(clauses));
}

std::string write_text(const Instance& instance, Format flavor) {
  if (flavor == Format::Dimacs) return write_dimacs(instance);
  if (flavor == Format::Ssat && !instance.is_simple())
    throw KindError("ssat output needs a Simple instance");
  const unsigned n = instance.num_vars();
  std::string out = std::string(to_string(flavor)) + " " + std::to_string(n) + " " +
                    std::to_string(instance.num_clauses()) + "\n";
  out.reserve(out.size() + instance.num_clauses() * (n + 1));
  for (const auto& c : instance.clauses()) {
    out += render_ternary(c, n);
    out += '\n';
  }
  return out;
}

Format detect_format(std::string_view text) {
  for (auto line : split_lines(text)) {
    auto tokens = split_ws(line);
    if (tokens.empty() || is_comment(line)) continue;
    if (tokens.front() == "p") return Format::Dimacs;
    if (tokens.front() == "tsat") return Format::Tsat;
    if (tokens.front() == "ssat") return Format::Ssat;
    break;
  }
  throw ParseError("unrecognized input format");
}

Instance read_instance(std::string_view text) {
  return detect_format(text) == Format::Dimacs ? read_dimacs(text) : read_text(text);
}

std::string write_instance(const Instance& instance, Format format) {
  return format == Format::Dimacs ? write_dimacs(instance) : write_text(instance, format);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

nlohmann::json counters_to_json(const Counters& c) {
  return {{"rows_read", c.rows_read},
          {"evaluations", c.evaluations},
          {"removals", c.removals},
          {"oracle_calls", c.oracle_calls},
          {"random_draws", c.random_draws}};
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["status"] = std::string(to_string(v.status));
  j["witness"] = v.witness ? nlohmann::json(v.witness->to_string()) : nlohmann::json(nullptr);
  j["source"] = v.source == Source::None ? nlohmann::json(nullptr)
                                         : nlohmann::json(std::string(to_string(v.source)));
  j["counters"] = counters_to_json(v.counters);
  j["augmented_rows"] = v.augmented_rows;
  return j;
}

nlohmann::json unsat_check_to_json(const UnsatCheck& check, unsigned n) {
  nlohmann::json j;
  j["result"] = std::string(to_string(check.result));
  if (check.result == UnsatCheck::Result::Inconsistent) {
    j["variable"] = check.var;
    j["value"] = check.value ? 1 : 0;
  } else {
    j["variable"] = nullptr;
    j["value"] = nullptr;
  }
  j["num_vars"] = n;
  j["counters"] = counters_to_json(check.counters);
  return j;
}

} // namespace ssat
