#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coct {

/// CNF formula. Literals use DIMACS conventions: +v / -v for variable v.
struct SatInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::string> warnings;

  int max_clause_size() const;
  bool has_empty_clause() const;
  /// assignment[v] for v in 1..num_vars; slot 0 unused.
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

SatInstance parse_dimacs(std::string_view text);
SatInstance read_dimacs(std::istream& in);

/// Exhaustive search, for small formulas only (at most 24 variables).
std::optional<std::vector<bool>> find_satisfying_assignment(const SatInstance& sat);

}  // namespace coct
