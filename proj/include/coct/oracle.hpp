#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coct/clique_expr.hpp"
#include "coct/color.hpp"
#include "coct/dp.hpp"
#include "coct/graph.hpp"
#include "coct/pattern.hpp"

namespace coct {

inline constexpr int kMaxOracleVertices = 24;
inline constexpr int kMaxEnumeratedWnodes = 10;

/// A smallest connected odd cycle transversal of size <= bhat, by subset
/// enumeration in increasing size. The empty set counts when g is bipartite.
std::optional<VertexSet> brute_force_solve(const LabeledGraph& g, int bhat);

/// Values in 1..4 indexed by node id; entries of non-wnodes are ignored.
using ActionSequence = std::vector<int>;

struct GeneratedPair {
  Pattern pattern;
  Coloring coloring;
  bool valid = true;
  int cost = 0;
};

/// The pair generated by tau at `node`; nullopt when some action is
/// undefined on the way.
std::optional<GeneratedPair> generate_pair(const CliqueExpression& e, int v0, const ActionSequence& tau, int node);
inline std::optional<GeneratedPair> generate_pair(const CliqueExpression& e, int v0, const ActionSequence& tau) {
  return generate_pair(e, v0, tau, e.root());
}

/// The pair generated by the solution-sequence of (S, witness): 0 for
/// vertices of S, 3 for black and 4 for white ones.
GeneratedPair generate_solution_pair(const CliqueExpression& e, int v0, const VertexSet& s, const Witness& witness,
                                     int node);
inline GeneratedPair generate_solution_pair(const CliqueExpression& e, int v0, const VertexSet& s,
                                            const Witness& witness) {
  return generate_solution_pair(e, v0, s, witness, e.root());
}

/// The pattern of the components of G[S], computed directly on the graph.
Pattern solution_pattern(const LabeledGraph& g, int v0, const VertexSet& s);
/// Colors of the vertices outside S, collected per label.
Coloring solution_coloring(const LabeledGraph& g, const Witness& witness);

struct CountKey {
  int cost;
  int weight;
  Pattern pattern;
  Coloring coloring;
  friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

/// Every key generated by an odd number of valid action-sequences at `node`.
std::map<CountKey, bool> enumerate_and_count(const CliqueExpression& e, int v0, const WeightAssignment& wf, int node);
inline std::map<CountKey, bool> enumerate_and_count(const CliqueExpression& e, int v0, const WeightAssignment& wf) {
  return enumerate_and_count(e, v0, wf, e.root());
}

}  // namespace coct
