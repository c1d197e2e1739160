#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coct/clique_expr.hpp"
#include "coct/graph.hpp"
#include "coct/sat.hpp"

namespace coct {

// The four simple states and the twelve gadget states s1..s12 (index 0..11).
enum class Simple : std::uint8_t { conn = 0, disc = 1, black = 2, white = 3 };
inline constexpr int kGadgetStates = 12;
using StateTriple = std::array<Simple, 3>;

const std::array<StateTriple, kGadgetStates>& gadget_states();
/// nxt(s) for each of the twelve states.
const std::array<StateTriple, kGadgetStates>& next_triples();

struct SimpleGadget {
  Vertex v = 0;
  Vertex u = 0;
  Vertex w = 0;
  Vertex z = 0;
  std::array<Vertex, 4> x{};  // state vertices, indexed by Simple
  Vertex sub_black = 0;       // subdivides v - x_black
  Vertex sub_white = 0;       // subdivides v - x_white
};

struct PathGadget {
  std::array<SimpleGadget, 6> y;
  std::array<Vertex, kGadgetStates> transition{};

  /// The 72 non-triangle vertices.
  std::vector<Vertex> vertices() const;
};

struct DecodingGadget {
  /// Deletion pairs indexed by the code of a state assignment: the
  /// base-12 number whose most significant digit is the first gadget.
  std::vector<Vertex> u;
  std::vector<Vertex> w;
};

struct ClauseGadget {
  int clause = 0;                // 0-based index into the formula
  std::vector<Vertex> cycle;     // c_1 .. c_d'
  Vertex extra = 0;              // c_0 when d' is even, else 0
  std::vector<int> groups;       // variable group (0-based) of each fragment
  std::vector<std::vector<int>> fragments;
};

struct ReductionInstance {
  SatInstance sat;
  int t0 = 0;
  int t = 0;
  int s = 0;
  int nprime = 0;
  int d = 0;
  std::int64_t c = 0;
  std::int64_t budget = 0;
  int codes = 0;  // 12^t

  LabeledGraph graph;
  CliqueExpression expr;

  Vertex root = 0;
  Vertex broot = 0;
  Vertex g1 = 0;
  Vertex g2 = 0;
  /// path[i][j]: gadget of path sequence i in column j (0-based).
  std::vector<std::vector<PathGadget>> path;
  /// decoding[l][j]: gadget of variable group l in column j.
  std::vector<std::vector<DecodingGadget>> decoding;
  std::vector<ClauseGadget> clause;
  /// Vertices created only to close a triangle.
  std::vector<bool> triangle_vertex;

  int label_bound() const { return nprime + d + 2 * codes + 80; }
  /// Variables of group l, 1-based and ascending.
  std::vector<int> group_variables(int l) const;
};

struct ReductionLimits {
  std::int64_t max_vertices = 20'000'000;
  int max_t = 3;
};

/// Smallest t with 12^t >= 2^t0.
int states_exponent(int t0);

ReductionInstance build_instance(const SatInstance& sat, int t0, const ReductionLimits& limits = {});

/// The assignment code used for the variables of group l under `assignment`.
int assignment_code(const ReductionInstance& inst, int l, const std::vector<bool>& assignment);

/// The solution of size budget induced by a satisfying assignment.
VertexSet solution_from_assignment(const ReductionInstance& inst, const std::vector<bool>& assignment);

/// The state index (0..11) of a path gadget under S: its unique transition
/// vertex outside S. nullopt unless exactly one is missing.
std::optional<int> gadget_state(const PathGadget& gadget, const VertexSet& s);

/// Reads an assignment off a connected odd cycle transversal of size budget;
/// nullopt when S is not one.
std::optional<std::vector<bool>> extract_assignment(const ReductionInstance& inst, const VertexSet& s);

}  // namespace coct
