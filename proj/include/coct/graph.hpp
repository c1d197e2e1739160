#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace coct {

// Vertices are numbered 1..n throughout the toolkit.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of the vertex range 1..n, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n);
  VertexSet(int n, std::initializer_list<Vertex> members);

  int universe() const { return n_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph with a label in [1, k] on every vertex.
/// Immutable; build one with GraphBuilder.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// `labels[v-1]` is the label of v. Edges may repeat or come in any
  /// orientation; they are normalized to u < v and deduplicated.
  LabeledGraph(std::vector<int> labels, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  std::size_t num_edges() const { return edges_.size(); }
  int label(Vertex v) const { return labels_[v - 1]; }
  int max_label() const;
  std::span<const Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  /// Sorted, u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& labels() const { return labels_; }

 private:
  std::vector<int> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

class GraphBuilder {
 public:
  Vertex add_vertex(int label);
  void add_edge(Vertex u, Vertex v);
  void set_label(Vertex v, int label);
  int num_vertices() const { return static_cast<int>(labels_.size()); }
  std::size_t num_edge_insertions() const { return edges_.size(); }
  LabeledGraph build() &&;

 private:
  std::vector<int> labels_;
  std::vector<Edge> edges_;
};

enum class Side : std::int8_t { removed = -1, black = 0, white = 1 };

/// Per-vertex side of a 2-coloring, indexed by vertex id (slot 0 unused).
using Witness = std::vector<Side>;

bool is_connected(const LabeledGraph& g, const VertexSet& s);

/// A proper 2-coloring of G - s, or nullopt when G - s has an odd cycle.
/// Vertices of s are reported as Side::removed.
std::optional<Witness> two_coloring(const LabeledGraph& g, const VertexSet& s);

/// s is a connected odd cycle transversal of g.
bool verify_coct(const LabeledGraph& g, const VertexSet& s);

bool is_bipartite(const LabeledGraph& g);

// Text format:  p graph <n> <m> / e <u> <v> / l <v> <label> / c comment
LabeledGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const LabeledGraph& g);

}  // namespace coct
