#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coct/graph.hpp"

namespace coct {

enum class NodeKind : std::uint8_t { introduce, union_, relabel, join };

/// One operation of a clique-expression.
///   introduce: first = vertex id, second = label
///   relabel:   first -> second
///   join:      labels first, second (distinct)
struct ExprNode {
  NodeKind kind;
  int first = 0;
  int second = 0;
  int left = -1;   // only child for relabel/join
  int right = -1;  // union only
};

/// Immutable syntax tree of a clique-expression. Node ids are preorder
/// positions, so the root is node 0 and ids are stable for a given text.
class CliqueExpression {
 public:
  CliqueExpression() = default;

  std::size_t size() const { return nodes_.size(); }
  const ExprNode& node(int id) const { return nodes_[id]; }
  const std::vector<ExprNode>& nodes() const { return nodes_; }
  int root() const { return 0; }

  /// Largest label mentioned anywhere.
  int width() const { return width_; }
  /// Every union's right operand is a single introduce.
  bool is_linear() const;
  int num_vertices() const { return num_vertices_; }

  /// Children before parents.
  std::vector<int> postorder() const;
  /// One past the last node id of the subtree rooted at `id`.
  int subtree_end(int id) const { return subtree_end_[id]; }

  friend bool operator==(const CliqueExpression& a, const CliqueExpression& b);

 private:
  friend class ExpressionBuilder;

  std::vector<ExprNode> nodes_;
  std::vector<int> subtree_end_;
  int width_ = 0;
  int num_vertices_ = 0;
};

/// Assembles an expression bottom-up; finish() renumbers to preorder and
/// validates.
class ExpressionBuilder {
 public:
  int introduce(int vertex, int label);
  int unite(int left, int right);
  int relabel(int from, int to, int child);
  int join(int a, int b, int child);
  std::size_t size() const { return nodes_.size(); }

  CliqueExpression finish(int root) &&;

 private:
  std::vector<ExprNode> nodes_;
};

struct NodeSets {
  std::vector<int> cnodes;  // introduce nodes
  std::vector<int> wnodes;  // introduce and join nodes
};

inline constexpr int kDefaultMaxLabel = 1 << 16;

/// Grammar: (v id label) | (u E E) | (r i j E) | (e i j E); ';' comments.
CliqueExpression parse_expression(std::string_view text, int max_label = kDefaultMaxLabel);
CliqueExpression read_expression(std::istream& in, int max_label = kDefaultMaxLabel);

/// Canonical single-line text, newline terminated.
std::string serialize(const CliqueExpression& e);
void write_expression(std::ostream& out, const CliqueExpression& e);

/// G_mu with its final labeling. Vertex ids must be exactly 1..n.
LabeledGraph evaluate(const CliqueExpression& e);

NodeSets node_sets(const CliqueExpression& e);
/// Restricted to the subtree rooted at `subtree_root`.
NodeSets node_sets(const CliqueExpression& e, int subtree_root);

}  // namespace coct
