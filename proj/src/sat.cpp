#include "coct/sat.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <sstream>

#include "coct/error.hpp"

namespace coct {

int SatInstance::max_clause_size() const {
  std::size_t d = 0;
  for (const auto& c : clauses) d = std::max(d, c.size());
  return static_cast<int>(d);
}

bool SatInstance::has_empty_clause() const {
  return std::any_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.empty(); });
}

bool SatInstance::satisfied_by(const std::vector<bool>& assignment) const {
  if (assignment.size() != static_cast<std::size_t>(num_vars) + 1) throw InputError("assignment size mismatch");
  return std::all_of(clauses.begin(), clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(), [&](int lit) { return assignment[std::abs(lit)] == (lit > 0); });
  });
}

SatInstance parse_dimacs(std::string_view text) {
  SatInstance sat;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared = -1;
  std::vector<int> current;
  int current_line = 0;

  auto finish_clause = [&]() {
    for (int lit : current) {
      if (std::count(current.begin(), current.end(), -lit)) throw ParseError("tautological clause", current_line, 1);
    }
    std::vector<int> unique;
    for (int lit : current) {
      if (std::find(unique.begin(), unique.end(), lit) == unique.end()) unique.push_back(lit);
    }
    if (unique.size() != current.size()) {
      sat.warnings.push_back("repeated literal dropped at line " + std::to_string(current_line));
      current = std::move(unique);
    }
    if (current.empty()) {
      sat.warnings.push_back("empty clause at line " + std::to_string(current_line) +
                             ": the formula is unsatisfiable");
    }
    sat.clauses.push_back(current);
    current.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string kind;
      if (sat.num_vars > 0 || declared >= 0) throw ParseError("duplicate header", line_no, 1);
      if (!(fields >> kind >> sat.num_vars >> declared) || kind != "cnf" || sat.num_vars < 0 || declared < 0) {
        throw ParseError("expected 'p cnf <vars> <clauses>'", line_no, 1);
      }
      continue;
    }
    if (declared < 0) throw ParseError("clause before header", line_no, 1);
    do {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw ParseError("expected an integer literal, got '" + tok + "'", line_no, 1);
      if (current.empty()) current_line = line_no;
      if (lit == 0) {
        if (current_line == 0) current_line = line_no;
        finish_clause();
        current_line = 0;
        continue;
      }
      if (std::labs(lit) > sat.num_vars) {
        throw ParseError("variable " + std::to_string(std::labs(lit)) + " out of range", line_no, 1);
      }
      current.push_back(static_cast<int>(lit));
    } while (fields >> tok);
  }
  if (declared < 0) throw ParseError("missing 'p cnf' header", line_no, 1);
  if (!current.empty()) finish_clause();
  if (static_cast<int>(sat.clauses.size()) != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(sat.clauses.size()),
                     line_no, 1);
  }
  return sat;
}

SatInstance read_dimacs(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_dimacs(text);
}

std::optional<std::vector<bool>> find_satisfying_assignment(const SatInstance& sat) {
  if (sat.num_vars > 24) throw InputError("exhaustive SAT search is limited to 24 variables");
  std::vector<bool> assignment(static_cast<std::size_t>(sat.num_vars) + 1, false);
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << sat.num_vars); ++code) {
    for (int v = 1; v <= sat.num_vars; ++v) assignment[v] = (code >> (v - 1)) & 1U;
    if (sat.satisfied_by(assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace coct
