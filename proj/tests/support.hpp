#pragma once

// Oracles written directly from the definitions, sharing no code with the
// library beyond its value types.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coct/clique_expr.hpp"
#include "coct/color.hpp"
#include "coct/graph.hpp"
#include "coct/pattern.hpp"

namespace testing_support {

using coct::Pattern;

// p ~ q: the closure of "S in p meets S' in q" over the set p u q leaves one class.
inline bool consistent(const Pattern& p, const Pattern& q) {
  std::vector<std::uint32_t> nodes;
  std::vector<int> side;  // 1 = p only, 2 = q only, 3 = both
  for (auto s : p.sets()) {
    nodes.push_back(s);
    side.push_back(1);
  }
  for (auto s : q.sets()) {
    bool found = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == s) {
        side[i] |= 2;
        found = true;
      }
    }
    if (!found) {
      nodes.push_back(s);
      side.push_back(2);
    }
  }
  std::vector<char> seen(nodes.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (seen[b] || !(nodes[a] & nodes[b])) continue;
      if (!((side[a] & 1) && (side[b] & 2)) && !((side[a] & 2) && (side[b] & 1))) continue;
      seen[b] = 1;
      ++reached;
      stack.push_back(b);
    }
  }
  return reached == nodes.size();
}

// L0 = {1,2,3} x diamond{1 < 2,3 < 4}.
struct L0 {
  int x;
  int y;
};

inline bool leq_l0(L0 a, L0 b) {
  const bool yle = a.y == b.y || a.y == 1 || b.y == 4;
  return a.x <= b.x && yle;
}

// Least upper bound by search over all twelve elements.
inline L0 join_l0(L0 a, L0 b) {
  std::vector<L0> upper;
  for (int x = 1; x <= 3; ++x) {
    for (int y = 1; y <= 4; ++y) {
      L0 c{x, y};
      if (leq_l0(a, c) && leq_l0(b, c)) upper.push_back(c);
    }
  }
  for (auto c : upper) {
    bool least = true;
    for (auto d : upper) least = least && leq_l0(c, d);
    if (least) return c;
  }
  return {0, 0};
}

inline std::vector<L0> digits(std::uint64_t state, int k) {
  std::vector<L0> out;
  for (int i = 0; i < k; ++i) {
    const int d = static_cast<int>(state % 12);
    state /= 12;
    out.push_back({d / 4 + 1, d % 4 + 1});
  }
  return out;
}

inline std::uint64_t undigits(const std::vector<L0>& ds) {
  std::uint64_t s = 0;
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) s = s * 12 + static_cast<std::uint64_t>((it->x - 1) * 4 + it->y - 1);
  return s;
}

// rho straight from the definition.
inline std::vector<L0> rho_digits(const Pattern& p, coct::Coloring c, int k) {
  std::vector<L0> out;
  const auto zero = p.zero_set();
  const auto lbs = p.lbs();
  for (int i = 1; i <= k; ++i) {
    const int x = (zero >> i & 1U) ? 3 : (lbs >> i & 1U) ? 2 : 1;
    int y = 1;
    switch (c[i]) {
      case coct::Color::noc: y = 1; break;
      case coct::Color::black: y = 2; break;
      case coct::Color::white: y = 3; break;
      case coct::Color::bw: y = 4; break;
    }
    out.push_back({x, y});
  }
  return out;
}

// Bit-vector convolution C[z] = sum_{x v y = z} A[x] B[y] over L0^k.
inline std::vector<bool> vee_naive(const std::vector<bool>& a, const std::vector<bool>& b, int k) {
  std::vector<bool> c(a.size(), false);
  for (std::uint64_t x = 0; x < a.size(); ++x) {
    if (!a[x]) continue;
    const auto dx = digits(x, k);
    for (std::uint64_t y = 0; y < b.size(); ++y) {
      if (!b[y]) continue;
      const auto dy = digits(y, k);
      std::vector<L0> dz;
      for (int i = 0; i < k; ++i) dz.push_back(join_l0(dx[i], dy[i]));
      const auto z = undigits(dz);
      c[z] = !c[z];
    }
  }
  return c;
}

inline bool connected_subset(const coct::LabeledGraph& g, std::uint32_t mask) {
  if (mask == 0) return true;
  const int n = g.num_vertices();
  int start = 0;
  while (!(mask >> start & 1U)) ++start;
  std::uint32_t seen = 1U << start;
  std::vector<int> stack{start + 1};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 1; v <= n; ++v) {
      const std::uint32_t bit = 1U << (v - 1);
      if ((mask & bit) && !(seen & bit) && g.has_edge(u, v)) {
        seen |= bit;
        stack.push_back(v);
      }
    }
  }
  return seen == mask;
}

inline bool bipartite_without(const coct::LabeledGraph& g, std::uint32_t mask) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  for (int s = 1; s <= n; ++s) {
    if ((mask >> (s - 1) & 1U) || color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 1; v <= n; ++v) {
        if ((mask >> (v - 1) & 1U) || !g.has_edge(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Size of a smallest connected odd cycle transversal, scanning every subset.
inline int min_coct_size(const coct::LabeledGraph& g) {
  const int n = g.num_vertices();
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    if (connected_subset(g, mask) && bipartite_without(g, mask)) best = size;
  }
  return best;
}

inline coct::CliqueExpression parse(const std::string& text) { return coct::parse_expression(text); }

// a and b side by side; b's vertex ids are shifted past a's.
inline coct::CliqueExpression disjoint_union(const coct::CliqueExpression& a, const coct::CliqueExpression& b) {
  coct::ExpressionBuilder builder;
  auto copy = [&](const coct::CliqueExpression& e, int shift) {
    std::vector<int> id(e.size());
    for (int x : e.postorder()) {
      const auto& n = e.node(x);
      switch (n.kind) {
        case coct::NodeKind::introduce: id[x] = builder.introduce(n.first + shift, n.second); break;
        case coct::NodeKind::union_: id[x] = builder.unite(id[n.left], id[n.right]); break;
        case coct::NodeKind::relabel: id[x] = builder.relabel(n.first, n.second, id[n.left]); break;
        case coct::NodeKind::join: id[x] = builder.join(n.first, n.second, id[n.left]); break;
      }
    }
    return id[e.root()];
  };
  const int left = copy(a, 0);
  const int right = copy(b, a.num_vertices());
  return std::move(builder).finish(builder.unite(left, right));
}

}  // namespace testing_support
