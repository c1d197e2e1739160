#include "coct/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "coct/error.hpp"

namespace coct {

namespace {

// Subset masks of {1..n} with popcount r, in increasing order.
bool next_combination(std::uint32_t& mask, std::uint32_t limit) {
  const std::uint32_t low = mask & -mask;
  const std::uint32_t ripple = mask + low;
  if (ripple == 0 || ripple >= limit) return false;
  mask = ripple | (((mask ^ ripple) >> 2) / low);
  return mask < limit;
}

}  // namespace

std::optional<VertexSet> brute_force_solve(const LabeledGraph& g, int bhat) {
  const int n = g.num_vertices();
  if (n > kMaxOracleVertices) {
    throw InputError("brute force is limited to " + std::to_string(kMaxOracleVertices) + " vertices");
  }
  if (bhat < 0) throw InputError("budget must be non-negative");
  const std::uint32_t limit = std::uint32_t{1} << n;
  auto to_set = [&](std::uint32_t mask) {
    VertexSet s(n);
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1U) s.insert(v);
    }
    return s;
  };
  for (int size = 0; size <= std::min(bhat, n); ++size) {
    std::uint32_t mask = size == 0 ? 0 : (std::uint32_t{1} << size) - 1;
    while (true) {
      auto s = to_set(mask);
      if (verify_coct(g, s)) return s;
      if (size == 0 || !next_combination(mask, limit)) break;
    }
  }
  return std::nullopt;
}

namespace {

Pattern introduce_pattern(int vertex, int v0, int label) {
  return vertex == v0 ? Pattern({1U | (1U << label)}) : Pattern({1U, 1U << label});
}

std::vector<int> subtree_postorder(const CliqueExpression& e, int node) {
  // Children have larger preorder ids than their parent.
  std::vector<int> order(static_cast<std::size_t>(e.subtree_end(node) - node));
  std::iota(order.rbegin(), order.rend(), node);
  return order;
}

}  // namespace

std::optional<GeneratedPair> generate_pair(const CliqueExpression& e, int v0, const ActionSequence& tau, int node) {
  std::vector<std::optional<GeneratedPair>> at(e.size());
  for (int x : subtree_postorder(e, node)) {
    const auto& n = e.node(x);
    GeneratedPair out;
    switch (n.kind) {
      case NodeKind::introduce: {
        const int i = n.second;
        const Pattern p = introduce_pattern(n.first, v0, i);
        switch (tau[x]) {
          case 1: out.pattern = forget(p, i); out.cost = 1; break;
          case 2: out.pattern = fix(p, i); out.cost = 1; break;
          case 3: out.coloring = Coloring::single(i, Color::black); break;
          case 4: out.coloring = Coloring::single(i, Color::white); break;
          default: throw InputError("action values must be in 1..4");
        }
        break;
      }
      case NodeKind::relabel: {
        const auto& child = *at[n.left];
        out = {pattern_relabel(child.pattern, n.first, n.second),
               coloring_relabel(child.coloring, n.first, n.second), child.valid, child.cost};
        break;
      }
      case NodeKind::join: {
        const auto& child = *at[n.left];
        auto acted = action(patadd(child.pattern, n.first, n.second), tau[x]);
        if (!acted) return std::nullopt;
        out = {std::move(*acted), child.coloring,
               child.valid && color_consistent(child.coloring[n.first], child.coloring[n.second]), child.cost};
        break;
      }
      case NodeKind::union_: {
        const auto& l = *at[n.left];
        const auto& r = *at[n.right];
        out = {pattern_union(l.pattern, r.pattern), coloring_join(l.coloring, r.coloring), l.valid && r.valid,
               l.cost + r.cost};
        break;
      }
    }
    if (n.left >= 0) at[n.left].reset();
    if (n.right >= 0) at[n.right].reset();
    at[x] = std::move(out);
  }
  return at[node];
}

GeneratedPair generate_solution_pair(const CliqueExpression& e, int v0, const VertexSet& s, const Witness& witness,
                                     int node) {
  std::vector<std::optional<GeneratedPair>> at(e.size());
  for (int x : subtree_postorder(e, node)) {
    const auto& n = e.node(x);
    GeneratedPair out;
    switch (n.kind) {
      case NodeKind::introduce: {
        const int v = n.first;
        const int i = n.second;
        if (s.contains(v)) {
          out.pattern = introduce_pattern(v, v0, i);
          out.cost = 1;
        } else {
          out.coloring = Coloring::single(i, witness[v] == Side::black ? Color::black : Color::white);
        }
        break;
      }
      case NodeKind::relabel: {
        const auto& child = *at[n.left];
        out = {pattern_relabel(child.pattern, n.first, n.second),
               coloring_relabel(child.coloring, n.first, n.second), child.valid, child.cost};
        break;
      }
      case NodeKind::join: {
        const auto& child = *at[n.left];
        out = {patadd(child.pattern, n.first, n.second), child.coloring,
               child.valid && color_consistent(child.coloring[n.first], child.coloring[n.second]), child.cost};
        break;
      }
      case NodeKind::union_: {
        const auto& l = *at[n.left];
        const auto& r = *at[n.right];
        out = {pattern_union(l.pattern, r.pattern), coloring_join(l.coloring, r.coloring), l.valid && r.valid,
               l.cost + r.cost};
        break;
      }
    }
    if (n.left >= 0) at[n.left].reset();
    if (n.right >= 0) at[n.right].reset();
    at[x] = std::move(out);
  }
  return *at[node];
}

Pattern solution_pattern(const LabeledGraph& g, int v0, const VertexSet& s) {
  const int n = g.num_vertices();
  std::vector<int> component(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::uint32_t> sets;
  std::uint32_t zero = 1U;
  for (Vertex start = 1; start <= n; ++start) {
    if (!s.contains(start) || component[start] >= 0) continue;
    const int id = static_cast<int>(sets.size());
    std::uint32_t labels = 0;
    bool has_root = false;
    std::vector<Vertex> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      labels |= 1U << g.label(u);
      has_root = has_root || u == v0;
      for (Vertex w : g.neighbors(u)) {
        if (s.contains(w) && component[w] < 0) {
          component[w] = id;
          stack.push_back(w);
        }
      }
    }
    if (has_root) {
      zero |= labels;
    } else {
      sets.push_back(labels);
    }
  }
  sets.push_back(zero);
  return Pattern(std::move(sets));
}

Coloring solution_coloring(const LabeledGraph& g, const Witness& witness) {
  Coloring c;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (witness[v] == Side::removed) continue;
    const int l = g.label(v);
    c.set(l, color_join(c[l], witness[v] == Side::black ? Color::black : Color::white));
  }
  return c;
}

std::map<CountKey, bool> enumerate_and_count(const CliqueExpression& e, int v0, const WeightAssignment& wf, int node) {
  const auto sets = node_sets(e, node);
  const auto m = sets.wnodes.size();
  if (m > static_cast<std::size_t>(kMaxEnumeratedWnodes)) {
    throw InputError("enumeration is limited to " + std::to_string(kMaxEnumeratedWnodes) + " weighted nodes");
  }
  std::map<CountKey, bool> odd;
  ActionSequence tau(e.size(), 0);
  const std::uint64_t total = std::uint64_t{1} << (2 * m);
  for (std::uint64_t code = 0; code < total; ++code) {
    int weight = 0;
    for (std::size_t p = 0; p < m; ++p) {
      const int x = sets.wnodes[p];
      tau[x] = static_cast<int>((code >> (2 * p)) & 3U) + 1;
      weight += wf(x, tau[x]);
    }
    auto pair = generate_pair(e, v0, tau, node);
    if (!pair || !pair->valid) continue;
    CountKey key{pair->cost, weight, std::move(pair->pattern), pair->coloring};
    auto it = odd.find(key);
    if (it == odd.end()) {
      odd.emplace(std::move(key), true);
    } else {
      odd.erase(it);
    }
  }
  return odd;
}

}  // namespace coct
