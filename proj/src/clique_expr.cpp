#include "coct/clique_expr.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "coct/error.hpp"

namespace coct {

bool operator==(const ExprNode& a, const ExprNode& b) {
  return a.kind == b.kind && a.first == b.first && a.second == b.second && a.left == b.left &&
         a.right == b.right;
}

bool operator==(const CliqueExpression& a, const CliqueExpression& b) { return a.nodes_ == b.nodes_; }

bool CliqueExpression::is_linear() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [&](const ExprNode& n) {
    return n.kind != NodeKind::union_ || nodes_[n.right].kind == NodeKind::introduce;
  });
}

std::vector<int> CliqueExpression::postorder() const {
  std::vector<int> order;
  if (nodes_.empty()) return order;
  order.reserve(nodes_.size());
  std::vector<std::pair<int, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(id);
      continue;
    }
    stack.push_back({id, true});
    const auto& n = nodes_[id];
    if (n.right >= 0) stack.push_back({n.right, false});
    if (n.left >= 0) stack.push_back({n.left, false});
  }
  return order;
}

int ExpressionBuilder::introduce(int vertex, int label) {
  nodes_.push_back({NodeKind::introduce, vertex, label});
  return static_cast<int>(nodes_.size()) - 1;
}

int ExpressionBuilder::unite(int left, int right) {
  nodes_.push_back({NodeKind::union_, 0, 0, left, right});
  return static_cast<int>(nodes_.size()) - 1;
}

int ExpressionBuilder::relabel(int from, int to, int child) {
  nodes_.push_back({NodeKind::relabel, from, to, child});
  return static_cast<int>(nodes_.size()) - 1;
}

int ExpressionBuilder::join(int a, int b, int child) {
  nodes_.push_back({NodeKind::join, a, b, child});
  return static_cast<int>(nodes_.size()) - 1;
}

CliqueExpression ExpressionBuilder::finish(int root) && {
  const int count = static_cast<int>(nodes_.size());
  if (root < 0 || root >= count) throw InputError("empty expression");

  std::vector<int> parents(nodes_.size(), 0);
  for (const auto& n : nodes_) {
    for (int c : {n.left, n.right}) {
      if (c < 0) continue;
      if (c >= count || ++parents[c] > 1) throw InternalError("expression nodes do not form a tree");
    }
  }

  CliqueExpression e;
  e.nodes_.reserve(nodes_.size());
  std::vector<int> new_id(nodes_.size(), -1);
  // Preorder: a node, then its left subtree, then its right subtree.
  std::vector<int> stack{root};
  std::vector<int> visit;
  visit.reserve(nodes_.size());
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    new_id[id] = static_cast<int>(visit.size());
    visit.push_back(id);
    const auto& n = nodes_[id];
    if (n.right >= 0) stack.push_back(n.right);
    if (n.left >= 0) stack.push_back(n.left);
  }
  if (visit.size() != nodes_.size()) throw InternalError("expression has unreachable nodes");

  std::unordered_set<int> seen_vertices;
  for (int old : visit) {
    ExprNode n = nodes_[old];
    switch (n.kind) {
      case NodeKind::introduce:
        if (n.first < 1) throw InputError("vertex ids must be positive");
        if (n.second < 1) throw InputError("labels must be positive");
        if (!seen_vertices.insert(n.first).second) {
          throw InputError("duplicate vertex id " + std::to_string(n.first));
        }
        break;
      case NodeKind::join:
        if (n.first == n.second) throw InputError("join labels must differ");
        [[fallthrough]];
      case NodeKind::relabel:
        if (n.first < 1 || n.second < 1) throw InputError("labels must be positive");
        if (n.kind == NodeKind::relabel && n.first == n.second) {
          throw InputError("relabel labels must differ");
        }
        break;
      case NodeKind::union_:
        break;
    }
    if (n.kind != NodeKind::introduce) {
      e.width_ = std::max({e.width_, n.first, n.second});
    } else {
      e.width_ = std::max(e.width_, n.second);
    }
    if (n.left >= 0) n.left = new_id[n.left];
    if (n.right >= 0) n.right = new_id[n.right];
    e.nodes_.push_back(n);
  }
  e.num_vertices_ = static_cast<int>(seen_vertices.size());

  std::vector<int> size(e.nodes_.size(), 1);
  for (int id = static_cast<int>(e.nodes_.size()) - 1; id >= 0; --id) {
    const auto& n = e.nodes_[id];
    if (n.left >= 0) size[id] += size[n.left];
    if (n.right >= 0) size[id] += size[n.right];
  }
  e.subtree_end_.resize(e.nodes_.size());
  for (std::size_t id = 0; id < size.size(); ++id) e.subtree_end_[id] = static_cast<int>(id) + size[id];
  nodes_.clear();
  return e;
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { open, close, atom, end } kind;
    std::string_view text;
    int line;
    int column;
  };

  Token next() {
    skip();
    const int line = line_;
    const int column = column_;
    if (pos_ >= text_.size()) return {Token::end, {}, line, column};
    const char ch = text_[pos_];
    if (ch == '(' || ch == ')') {
      advance();
      return {ch == '(' ? Token::open : Token::close, text_.substr(pos_ - 1, 1), line, column};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      advance();
    }
    return {Token::atom, text_.substr(start, pos_ - start), line, column};
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

[[noreturn]] void syntax_error(const std::string& what, const Lexer::Token& at) {
  throw ParseError(what, at.line, at.column);
}

int parse_int(const Lexer::Token& tok) {
  if (tok.kind != Lexer::Token::atom) syntax_error("expected an integer", tok);
  int value = 0;
  bool any = false;
  for (char ch : tok.text) {
    if (ch < '0' || ch > '9') syntax_error("expected an integer, got '" + std::string(tok.text) + "'", tok);
    value = value * 10 + (ch - '0');
    if (value > (1 << 30)) syntax_error("integer too large", tok);
    any = true;
  }
  if (!any) syntax_error("expected an integer", tok);
  return value;
}

}  // namespace

CliqueExpression parse_expression(std::string_view text, int max_label) {
  struct Frame {
    char op;
    int a = 0;
    int b = 0;
    int children[2] = {-1, -1};
    int filled = 0;
    Lexer::Token at{};
  };

  Lexer lexer(text);
  ExpressionBuilder builder;
  std::vector<Frame> stack;
  int root = -1;

  auto check_label = [&](int label, const Lexer::Token& tok) {
    if (label < 1 || label > max_label) {
      syntax_error("label " + std::to_string(label) + " out of range 1.." + std::to_string(max_label), tok);
    }
  };
  auto expect_close = [&]() {
    auto tok = lexer.next();
    if (tok.kind != Lexer::Token::close) syntax_error("expected ')'", tok);
  };

  while (true) {
    auto tok = lexer.next();
    if (tok.kind == Lexer::Token::end) {
      if (!stack.empty() || root < 0) syntax_error("unexpected end of input", tok);
      break;
    }
    if (root >= 0) syntax_error("trailing input after expression", tok);
    if (tok.kind != Lexer::Token::open) syntax_error("expected '('", tok);
    auto op = lexer.next();
    if (op.kind != Lexer::Token::atom || op.text.size() != 1 ||
        std::string_view("vure").find(op.text[0]) == std::string_view::npos) {
      syntax_error("expected one of v, u, r, e", op);
    }

    int produced = -1;
    if (op.text[0] == 'v') {
      auto id_tok = lexer.next();
      const int id = parse_int(id_tok);
      if (id < 1) syntax_error("vertex ids must be positive", id_tok);
      auto label_tok = lexer.next();
      const int label = parse_int(label_tok);
      check_label(label, label_tok);
      expect_close();
      produced = builder.introduce(id, label);
    } else {
      Frame frame{};
      frame.op = op.text[0];
      frame.at = op;
      if (frame.op != 'u') {
        auto ta = lexer.next();
        frame.a = parse_int(ta);
        check_label(frame.a, ta);
        auto tb = lexer.next();
        frame.b = parse_int(tb);
        check_label(frame.b, tb);
        if (frame.a == frame.b) {
          syntax_error(frame.op == 'e' ? "join labels must differ" : "relabel labels must differ", tb);
        }
      }
      stack.push_back(frame);
      continue;
    }

    // Attach the finished subexpression and close every frame it completes.
    while (true) {
      if (stack.empty()) {
        root = produced;
        break;
      }
      auto& top = stack.back();
      top.children[top.filled++] = produced;
      const int needed = top.op == 'u' ? 2 : 1;
      if (top.filled < needed) break;
      expect_close();
      switch (top.op) {
        case 'u': produced = builder.unite(top.children[0], top.children[1]); break;
        case 'r': produced = builder.relabel(top.a, top.b, top.children[0]); break;
        default: produced = builder.join(top.a, top.b, top.children[0]); break;
      }
      stack.pop_back();
    }
  }

  try {
    return std::move(builder).finish(root);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& err) {
    throw ParseError(err.what(), 1, 1);
  }
}

CliqueExpression read_expression(std::istream& in, int max_label) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_expression(text, max_label);
}

void write_expression(std::ostream& out, const CliqueExpression& e) {
  // Work items are node ids (>= 0) or closing markers (-1 ")", -2 " ").
  std::vector<int> work{e.root()};
  while (!work.empty()) {
    const int item = work.back();
    work.pop_back();
    if (item == -1) {
      out << ')';
      continue;
    }
    if (item == -2) {
      out << ' ';
      continue;
    }
    const auto& n = e.node(item);
    switch (n.kind) {
      case NodeKind::introduce:
        out << "(v " << n.first << ' ' << n.second << ')';
        break;
      case NodeKind::union_:
        out << "(u ";
        work.insert(work.end(), {-1, n.right, -2, n.left});
        break;
      case NodeKind::relabel:
      case NodeKind::join:
        out << '(' << (n.kind == NodeKind::relabel ? 'r' : 'e') << ' ' << n.first << ' ' << n.second << ' ';
        work.insert(work.end(), {-1, n.left});
        break;
    }
  }
  out << '\n';
}

std::string serialize(const CliqueExpression& e) {
  std::ostringstream out;
  write_expression(out, e);
  return out.str();
}

LabeledGraph evaluate(const CliqueExpression& e) {
  using Buckets = std::map<int, std::vector<Vertex>>;
  const int n = e.num_vertices();
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;

  auto merge_into = [](std::vector<Vertex>& dst, std::vector<Vertex>& src) {
    if (dst.size() < src.size()) dst.swap(src);
    dst.insert(dst.end(), src.begin(), src.end());
    src.clear();
  };

  std::vector<Buckets> live(e.size());
  for (int id : e.postorder()) {
    const auto& node = e.node(id);
    switch (node.kind) {
      case NodeKind::introduce:
        if (node.first > n) {
          throw InputError("vertex ids must be exactly 1.." + std::to_string(n));
        }
        live[id][node.second].push_back(node.first);
        break;
      case NodeKind::union_: {
        Buckets big = std::move(live[node.left]);
        Buckets small = std::move(live[node.right]);
        if (big.size() < small.size()) std::swap(big, small);
        for (auto& [label, members] : small) merge_into(big[label], members);
        live[id] = std::move(big);
        break;
      }
      case NodeKind::relabel: {
        Buckets b = std::move(live[node.left]);
        if (auto it = b.find(node.first); it != b.end()) {
          std::vector<Vertex> moved = std::move(it->second);
          b.erase(it);
          merge_into(b[node.second], moved);
        }
        live[id] = std::move(b);
        break;
      }
      case NodeKind::join: {
        Buckets b = std::move(live[node.left]);
        auto a = b.find(node.first);
        auto c = b.find(node.second);
        if (a != b.end() && c != b.end()) {
          for (Vertex u : a->second) {
            for (Vertex v : c->second) edges.push_back({u, v});
          }
        }
        live[id] = std::move(b);
        break;
      }
    }
  }
  for (const auto& [label, members] : live[e.root()]) {
    for (Vertex v : members) labels[v - 1] = label;
  }
  return {std::move(labels), std::move(edges)};
}

NodeSets node_sets(const CliqueExpression& e, int subtree_root) {
  NodeSets sets;
  for (int id = subtree_root; id < e.subtree_end(subtree_root); ++id) {
    const auto kind = e.node(id).kind;
    if (kind == NodeKind::introduce) sets.cnodes.push_back(id);
    if (kind == NodeKind::introduce || kind == NodeKind::join) sets.wnodes.push_back(id);
  }
  return sets;
}

NodeSets node_sets(const CliqueExpression& e) { return node_sets(e, e.root()); }

}  // namespace coct
