#include "coct/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "coct/error.hpp"

namespace coct {

VertexSet::VertexSet(int n) : n_(n), words_((static_cast<std::size_t>(n) + 64) / 64, 0) {}

VertexSet::VertexSet(int n, std::initializer_list<Vertex> members) : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

void VertexSet::check(Vertex v) const {
  if (v < 1 || v > n_) {
    throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool VertexSet::contains(Vertex v) const {
  if (v < 1 || v > n_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

LabeledGraph::LabeledGraph(std::vector<int> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const int n = num_vertices();
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] < 1) {
      throw InputError("vertex " + std::to_string(v + 1) + " has no valid label");
    }
  }
  for (auto& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) {
      throw InputError("edge endpoint outside 1.." + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (int v = 1; v <= n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n + 1]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
}

int LabeledGraph::max_label() const {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

std::span<const Vertex> LabeledGraph::neighbors(Vertex v) const {
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Vertex GraphBuilder::add_vertex(int label) {
  labels_.push_back(label);
  return num_vertices();
}

void GraphBuilder::add_edge(Vertex u, Vertex v) { edges_.push_back({u, v}); }

void GraphBuilder::set_label(Vertex v, int label) {
  if (v < 1 || v > num_vertices()) throw InputError("label for unknown vertex");
  labels_[v - 1] = label;
}

LabeledGraph GraphBuilder::build() && { return {std::move(labels_), std::move(edges_)}; }

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

bool is_connected(const LabeledGraph& g, const VertexSet& s) {
  const auto members = s.members();
  if (members.size() <= 1) return true;
  DisjointSets sets(g.num_vertices());
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) sets.unite(e.u, e.v);
  }
  const int root = sets.find(members.front());
  return std::all_of(members.begin(), members.end(),
                     [&](Vertex v) { return sets.find(v) == root; });
}

std::optional<Witness> two_coloring(const LabeledGraph& g, const VertexSet& s) {
  const int n = g.num_vertices();
  std::vector<std::int8_t> color(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex start = 1; start <= n; ++start) {
    if (s.contains(start) || color[start] != -1) continue;
    color[start] = 0;
    queue.clear();
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (s.contains(w)) continue;
        if (color[w] == -1) {
          color[w] = static_cast<std::int8_t>(1 - color[u]);
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Witness out(static_cast<std::size_t>(n) + 1, Side::removed);
  for (Vertex v = 1; v <= n; ++v) {
    if (!s.contains(v)) out[v] = color[v] == 0 ? Side::black : Side::white;
  }
  return out;
}

bool verify_coct(const LabeledGraph& g, const VertexSet& s) {
  return is_connected(g, s) && two_coloring(g, s).has_value();
}

bool is_bipartite(const LabeledGraph& g) {
  return two_coloring(g, VertexSet(g.num_vertices())).has_value();
}

LabeledGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long long declared_m = -1;
  std::vector<int> labels;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& msg) { throw ParseError(msg, line_no, 1); };
    if (tag == "p") {
      std::string kind;
      if (n >= 0) fail("duplicate header");
      if (!(fields >> kind >> n >> declared_m) || kind != "graph" || n < 0 || declared_m < 0) {
        fail("expected 'p graph <n> <m>'");
      }
      labels.assign(static_cast<std::size_t>(n), 1);
    } else if (tag == "e") {
      if (n < 0) fail("edge before header");
      Vertex u = 0;
      Vertex v = 0;
      if (!(fields >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > n || v > n) fail("edge endpoint out of range");
      if (u == v) fail("self-loop");
      edges.push_back({u, v});
    } else if (tag == "l") {
      if (n < 0) fail("label before header");
      Vertex v = 0;
      int label = 0;
      if (!(fields >> v >> label)) fail("expected 'l <v> <label>'");
      if (v < 1 || v > n) fail("labeled vertex out of range");
      if (label < 1) fail("labels must be positive");
      labels[v - 1] = label;
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'p graph' header", line_no, 1);
  if (static_cast<long long>(edges.size()) != declared_m) {
    throw ParseError("header declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no, 1);
  }
  return {std::move(labels), std::move(edges)};
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (Vertex v = 1; v <= g.num_vertices(); ++v) out << "l " << v << ' ' << g.label(v) << '\n';
}

}  // namespace coct
