#include "coct/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "coct/error.hpp"

namespace coct {

namespace {

using S = Simple;

constexpr std::array<StateTriple, kGadgetStates> kStates = {{
    {S::conn, S::conn, S::conn},
    {S::conn, S::conn, S::disc},
    {S::conn, S::disc, S::black},
    {S::conn, S::disc, S::white},
    {S::conn, S::black, S::white},
    {S::disc, S::disc, S::disc},
    {S::disc, S::disc, S::black},
    {S::disc, S::disc, S::white},
    {S::disc, S::black, S::white},
    {S::black, S::black, S::black},
    {S::white, S::white, S::white},
    {S::black, S::black, S::white},
}};

constexpr std::array<StateTriple, kGadgetStates> kNext = {{
    {S::black, S::black, S::white},
    {S::disc, S::black, S::white},
    {S::disc, S::disc, S::white},
    {S::disc, S::disc, S::black},
    {S::disc, S::disc, S::disc},
    {S::conn, S::black, S::white},
    {S::conn, S::disc, S::white},
    {S::conn, S::disc, S::black},
    {S::conn, S::conn, S::disc},
    {S::white, S::white, S::white},
    {S::black, S::black, S::black},
    {S::conn, S::conn, S::conn},
}};

std::array<Simple, 6> sixtuple(int state) {
  const auto& a = kStates[state];
  const auto& b = kNext[state];
  return {a[0], a[1], a[2], b[0], b[1], b[2]};
}

// Builds the graph and a linear expression for it side by side. Every
// vertex is introduced and united with everything built so far; edges are
// recorded explicitly and produced in the expression by joins.
class Emitter {
 public:
  Emitter(int num_labels, int forget_label)
      : forget_(forget_label), members_(static_cast<std::size_t>(num_labels) + 1) {
    label_of_.push_back(0);
  }

  Vertex add(int label) {
    const Vertex v = graph_.add_vertex(label);
    label_of_.push_back(label);
    members_.at(label).push_back(v);
    const int leaf = expr_.introduce(v, label);
    current_ = current_ < 0 ? leaf : expr_.unite(current_, leaf);
    return v;
  }

  int label(Vertex v) const { return label_of_[v]; }

  void join_labels(int a, int b) { current_ = expr_.join(a, b, current_); }

  void relabel(int from, int to) {
    if (from == to) return;
    current_ = expr_.relabel(from, to, current_);
    auto& src = members_[from];
    for (Vertex v : src) label_of_[v] = to;
    auto& dst = members_[to];
    dst.insert(dst.end(), src.begin(), src.end());
    src.clear();
  }

  /// A single edge; both endpoints must own their labels.
  void edge(Vertex u, Vertex v) {
    require_unique(u);
    require_unique(v);
    graph_.add_edge(u, v);
    join_labels(label(u), label(v));
  }

  void forget(Vertex v) {
    require_unique(v);
    relabel(label(v), forget_);
  }

  void add_graph_edge(Vertex u, Vertex v) { graph_.add_edge(u, v); }
  const std::vector<Vertex>& members(int label) const { return members_[label]; }
  int num_vertices() const { return graph_.num_vertices(); }

  std::pair<LabeledGraph, CliqueExpression> finish() && {
    for (Vertex v = 1; v < static_cast<Vertex>(label_of_.size()); ++v) graph_.set_label(v, label_of_[v]);
    return {std::move(graph_).build(), std::move(expr_).finish(current_)};
  }

 private:
  void require_unique(Vertex v) const {
    if (members_[label(v)].size() != 1) throw InternalError("vertex label is shared");
  }

  int forget_;
  GraphBuilder graph_;
  ExpressionBuilder expr_;
  int current_ = -1;
  std::vector<int> label_of_;
  std::vector<std::vector<Vertex>> members_;
};

struct Labels {
  int nprime;
  int forget() const { return nprime + 1; }
  int tri() const { return nprime + 2; }
  int root() const { return nprime + 3; }
  int broot() const { return nprime + 4; }
  int g1() const { return nprime + 5; }
  int g2() const { return nprime + 6; }
  int white() const { return nprime + 7; }
  int clause_base() const { return nprime + 8; }
};

bool literal_holds(int lit, int position, int code) { return ((code >> position) & 1) == (lit > 0 ? 1 : 0); }

}  // namespace

const std::array<StateTriple, kGadgetStates>& gadget_states() { return kStates; }
const std::array<StateTriple, kGadgetStates>& next_triples() { return kNext; }

std::vector<Vertex> PathGadget::vertices() const {
  std::vector<Vertex> out;
  for (const auto& g : y) {
    out.insert(out.end(), {g.v, g.u, g.w, g.z});
    out.insert(out.end(), g.x.begin(), g.x.end());
    out.insert(out.end(), {g.sub_black, g.sub_white});
  }
  out.insert(out.end(), transition.begin(), transition.end());
  return out;
}

std::vector<int> ReductionInstance::group_variables(int l) const {
  std::vector<int> vars;
  for (int v = l * t0 + 1; v <= std::min(sat.num_vars, (l + 1) * t0); ++v) vars.push_back(v);
  return vars;
}

int states_exponent(int t0) {
  if (t0 < 1 || t0 > 40) throw InputError("t0 must be in 1..40");
  int t = 0;
  double power = 1;
  const double target = static_cast<double>(std::int64_t{1} << t0);
  while (power < target) {
    power *= kGadgetStates;
    ++t;
  }
  return t;
}

ReductionInstance build_instance(const SatInstance& sat, int t0, const ReductionLimits& limits) {
  if (sat.clauses.empty()) throw InputError("the formula has no clauses");
  if (sat.num_vars < 1) throw InputError("the formula has no variables");
  ReductionInstance inst;
  inst.sat = sat;
  inst.t0 = t0;
  inst.t = states_exponent(t0);
  if (inst.t > limits.max_t) throw InputError("12^t exceeds the configured limit; lower t0");
  inst.s = (sat.num_vars + t0 - 1) / t0;
  inst.nprime = inst.s * inst.t;
  inst.d = sat.max_clause_size();
  const std::int64_t m = static_cast<std::int64_t>(sat.clauses.size());
  inst.c = (11 * static_cast<std::int64_t>(inst.nprime) + 1) * m;
  inst.codes = 1;
  for (int i = 0; i < inst.t; ++i) inst.codes *= kGadgetStates;
  inst.budget = (41 * static_cast<std::int64_t>(inst.nprime) + static_cast<std::int64_t>(inst.codes) * inst.s + 1) *
                    inst.c +
                3;

  const std::int64_t per_path = 72 + 6 * 15 + 66 + 12 * 18;
  const std::int64_t per_decoding = 3LL * inst.codes + 11LL * inst.codes * inst.t;
  const std::int64_t estimate = inst.c * (inst.nprime * per_path + inst.s * per_decoding + 3 * (inst.d + 1)) + 16;
  if (estimate > limits.max_vertices) {
    throw InputError("reduction would create about " + std::to_string(estimate) + " vertices, over the limit of " +
                     std::to_string(limits.max_vertices));
  }

  const Labels L{inst.nprime};
  const int decoding_base = L.clause_base() + inst.d + 1;
  const int path_base = decoding_base + 2 * inst.codes;
  Emitter em(inst.label_bound(), L.forget());
  std::vector<bool> triangle(1, false);
  auto mark = [&](Vertex v, bool is_triangle) {
    if (static_cast<std::size_t>(v) >= triangle.size()) triangle.resize(static_cast<std::size_t>(v) + 1, false);
    triangle[v] = is_triangle;
  };
  auto add = [&](int label) {
    const Vertex v = em.add(label);
    mark(v, false);
    return v;
  };
  auto tri = [&](Vertex a, Vertex b) {
    em.edge(a, b);
    const Vertex w = em.add(L.tri());
    mark(w, true);
    em.edge(w, a);
    em.edge(w, b);
    em.forget(w);
  };
  auto tri_at = [&](Vertex v) {
    const Vertex a = em.add(L.white());
    const Vertex b = em.add(L.tri());
    mark(a, true);
    mark(b, true);
    em.edge(a, b);
    em.edge(a, v);
    em.edge(b, v);
    em.forget(a);
    em.forget(b);
  };
  auto color_white = [&](Vertex v) { em.edge(v, inst.broot); };
  auto color_black = [&](Vertex v) {
    const Vertex h = add(L.white());
    em.edge(h, inst.broot);
    em.edge(h, v);
    em.forget(h);
  };

  inst.root = add(L.root());
  inst.broot = add(L.broot());
  inst.g1 = add(L.g1());
  inst.g2 = add(L.g2());
  em.edge(inst.root, inst.g1);
  em.edge(inst.root, inst.g2);
  tri_at(inst.root);
  tri_at(inst.g1);
  tri_at(inst.g2);

  // Fragments of each clause, one per variable group, ascending.
  std::vector<ClauseGadget> templates(sat.clauses.size());
  for (std::size_t h = 0; h < sat.clauses.size(); ++h) {
    std::map<int, std::vector<int>> by_group;
    for (int lit : sat.clauses[h]) by_group[(std::abs(lit) - 1) / t0].push_back(lit);
    templates[h].clause = static_cast<int>(h);
    for (auto& [group, lits] : by_group) {
      templates[h].groups.push_back(group);
      templates[h].fragments.push_back(lits);
    }
  }

  const auto c = static_cast<int>(inst.c);
  inst.path.assign(static_cast<std::size_t>(inst.nprime), std::vector<PathGadget>(static_cast<std::size_t>(c)));
  inst.decoding.assign(static_cast<std::size_t>(inst.s), std::vector<DecodingGadget>(static_cast<std::size_t>(c)));
  inst.clause.resize(static_cast<std::size_t>(c));

  for (int j = 0; j < c; ++j) {
    auto& cg = inst.clause[j];
    cg = templates[static_cast<std::size_t>(j % m)];
    const int dp = static_cast<int>(cg.fragments.size());
    for (int i = 0; i < dp; ++i) cg.cycle.push_back(add(L.clause_base() + i));
    std::vector<Vertex> ring = cg.cycle;
    if (dp % 2 == 0) {
      cg.extra = add(L.clause_base() + dp);
      ring.push_back(cg.extra);
    }
    if (ring.size() == 1) {
      tri_at(ring.front());
    } else {
      for (std::size_t i = 0; i < ring.size(); ++i) em.edge(ring[i], ring[(i + 1) % ring.size()]);
    }

    for (int l = 0; l < inst.s; ++l) {
      auto& dg = inst.decoding[l][j];
      for (int code = 0; code < inst.codes; ++code) {
        dg.u.push_back(add(decoding_base + 2 * code));
        dg.w.push_back(add(decoding_base + 2 * code + 1));
        tri(dg.u.back(), dg.w.back());
        em.edge(inst.root, dg.u.back());
        em.edge(inst.root, dg.w.back());
      }
      const int width = static_cast<int>(inst.group_variables(l).size());
      for (int f = 0; f < dp; ++f) {
        if (cg.groups[f] != l) continue;
        for (int code = 0; code < (1 << width); ++code) {
          const bool sat_fragment = std::any_of(cg.fragments[f].begin(), cg.fragments[f].end(), [&](int lit) {
            return literal_holds(lit, std::abs(lit) - 1 - l * t0, code);
          });
          if (sat_fragment) em.edge(cg.cycle[f], dg.w[code]);
        }
      }

      for (int q = 0; q < inst.t; ++q) {
        const int seq = l * inst.t + q;
        auto& pg = inst.path[seq][j];
        int next_label = path_base;
        for (auto& y : pg.y) {
          y.v = add(next_label++);
          y.u = add(next_label++);
          y.w = add(next_label++);
          y.z = add(next_label++);
          for (auto& x : y.x) x = add(next_label++);
          y.sub_black = add(next_label++);
          y.sub_white = add(next_label++);
        }
        for (auto& z : pg.transition) z = add(next_label++);

        for (auto& y : pg.y) {
          for (Vertex a : {y.u, y.w, y.z}) em.edge(inst.root, a);
          for (Vertex a : y.x) em.edge(inst.root, a);
          tri(y.v, y.u);
          tri(y.u, y.w);
          tri(y.w, y.z);
          tri(y.z, y.v);
          for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) tri(y.x[a], y.x[b]);
          }
          const auto xs = [&](Simple st) { return y.x[static_cast<int>(st)]; };
          tri(y.u, xs(S::black));
          tri(y.u, xs(S::white));
          tri(y.w, xs(S::conn));
          tri(y.w, xs(S::disc));
          em.edge(y.v, y.sub_black);
          em.edge(y.sub_black, xs(S::black));
          em.edge(y.v, y.sub_white);
          em.edge(y.sub_white, xs(S::white));
          em.edge(y.v, xs(S::disc));
          color_black(xs(S::black));
          color_white(xs(S::white));
        }
        for (int a = 0; a < kGadgetStates; ++a) {
          em.edge(inst.root, pg.transition[a]);
          for (int b = a + 1; b < kGadgetStates; ++b) tri(pg.transition[a], pg.transition[b]);
        }
        for (int st = 0; st < kGadgetStates; ++st) {
          const auto six = sixtuple(st);
          for (int i = 0; i < 6; ++i) {
            for (int chi = 0; chi < 4; ++chi) {
              if (static_cast<Simple>(chi) != six[i]) tri(pg.transition[st], pg.y[i].x[chi]);
            }
          }
        }
        int place = 1;
        for (int r = q + 1; r < inst.t; ++r) place *= kGadgetStates;
        for (int code = 0; code < inst.codes; ++code) {
          const int digit = (code / place) % kGadgetStates;
          for (int st = 0; st < kGadgetStates; ++st) {
            if (st != digit) tri(pg.transition[st], dg.u[code]);
          }
        }

        const int exit_label = seq + 1;
        if (j == 0) {
          for (int h = 0; h < 3; ++h) em.edge(pg.y[h].v, inst.g1);
        } else {
          const auto& prev = inst.path[seq][j - 1];
          for (int h = 0; h < 3; ++h) {
            for (int e = 3; e < 6; ++e) em.add_graph_edge(pg.y[h].v, prev.y[e].v);
            em.join_labels(em.label(pg.y[h].v), exit_label);
          }
        }
        if (j == c - 1) {
          for (int h = 3; h < 6; ++h) em.edge(pg.y[h].v, inst.g2);
        }
        if (j != 0) em.relabel(exit_label, L.forget());
        for (Vertex v : pg.vertices()) {
          const bool exit = v == pg.y[3].v || v == pg.y[4].v || v == pg.y[5].v;
          if (!exit) em.forget(v);
        }
        for (int h = 3; h < 6; ++h) em.relabel(em.label(pg.y[h].v), exit_label);
      }
      for (int code = 0; code < inst.codes; ++code) {
        em.forget(dg.u[code]);
        em.forget(dg.w[code]);
      }
    }
    for (Vertex v : ring) em.forget(v);
  }

  auto [graph, expr] = std::move(em).finish();
  triangle.resize(static_cast<std::size_t>(graph.num_vertices()) + 1, false);
  inst.graph = std::move(graph);
  inst.expr = std::move(expr);
  inst.triangle_vertex = std::move(triangle);
  return inst;
}

int assignment_code(const ReductionInstance& inst, int l, const std::vector<bool>& assignment) {
  int code = 0;
  int p = 0;
  for (int v : inst.group_variables(l)) code |= (assignment[v] ? 1 : 0) << p++;
  return code;
}

VertexSet solution_from_assignment(const ReductionInstance& inst, const std::vector<bool>& assignment) {
  if (!inst.sat.satisfied_by(assignment)) throw InputError("assignment does not satisfy the formula");
  VertexSet s(inst.graph.num_vertices());
  s.insert(inst.root);
  s.insert(inst.g1);
  s.insert(inst.g2);
  for (int l = 0; l < inst.s; ++l) {
    const int code = assignment_code(inst, l, assignment);
    for (int q = 0; q < inst.t; ++q) {
      int place = 1;
      for (int r = q + 1; r < inst.t; ++r) place *= kGadgetStates;
      const int state = (code / place) % kGadgetStates;
      const auto six = sixtuple(state);
      for (const auto& pg : inst.path[l * inst.t + q]) {
        for (int i = 0; i < 6; ++i) {
          const auto& y = pg.y[i];
          if (six[i] == S::conn || six[i] == S::disc) {
            s.insert(y.v);
            s.insert(y.w);
          } else {
            s.insert(y.u);
            s.insert(y.z);
          }
          for (int chi = 0; chi < 4; ++chi) {
            if (static_cast<Simple>(chi) != six[i]) s.insert(y.x[chi]);
          }
        }
        for (int st = 0; st < kGadgetStates; ++st) {
          if (st != state) s.insert(pg.transition[st]);
        }
      }
    }
    for (const auto& dg : inst.decoding[l]) {
      for (int other = 0; other < inst.codes; ++other) {
        if (other != code) s.insert(dg.u[other]);
      }
      s.insert(dg.w[code]);
    }
  }
  for (const auto& cg : inst.clause) {
    for (std::size_t f = 0; f < cg.fragments.size(); ++f) {
      const int l = cg.groups[f];
      const int code = assignment_code(inst, l, assignment);
      const bool holds = std::any_of(cg.fragments[f].begin(), cg.fragments[f].end(), [&](int lit) {
        return literal_holds(lit, std::abs(lit) - 1 - l * inst.t0, code);
      });
      if (holds) {
        s.insert(cg.cycle[f]);
        break;
      }
    }
  }
  return s;
}

std::optional<int> gadget_state(const PathGadget& gadget, const VertexSet& s) {
  std::optional<int> state;
  for (int st = 0; st < kGadgetStates; ++st) {
    if (s.contains(gadget.transition[st])) continue;
    if (state) return std::nullopt;
    state = st;
  }
  return state;
}

std::optional<std::vector<bool>> extract_assignment(const ReductionInstance& inst, const VertexSet& s) {
  if (s.universe() != inst.graph.num_vertices() || s.size() != inst.budget || !verify_coct(inst.graph, s)) {
    return std::nullopt;
  }
  const auto c = static_cast<int>(inst.c);
  std::vector<std::vector<int>> states(static_cast<std::size_t>(inst.nprime), std::vector<int>(c));
  for (int i = 0; i < inst.nprime; ++i) {
    for (int j = 0; j < c; ++j) {
      const auto st = gadget_state(inst.path[i][j], s);
      if (!st) return std::nullopt;
      states[i][j] = *st;
    }
  }
  const int m = static_cast<int>(inst.sat.clauses.size());
  const int sections = 11 * inst.nprime + 1;
  for (int sec = 0; sec < sections; ++sec) {
    bool stable = true;
    for (int i = 0; i < inst.nprime && stable; ++i) {
      for (int j = sec * m; j < (sec + 1) * m && j + 1 < c && stable; ++j) stable = states[i][j] == states[i][j + 1];
    }
    if (!stable) continue;

    std::vector<bool> assignment(static_cast<std::size_t>(inst.sat.num_vars) + 1, false);
    for (int l = 0; l < inst.s; ++l) {
      int code = 0;
      for (int q = 0; q < inst.t; ++q) code = code * kGadgetStates + states[l * inst.t + q][sec * m];
      const auto vars = inst.group_variables(l);
      if (code >= (1 << vars.size())) continue;
      for (std::size_t p = 0; p < vars.size(); ++p) assignment[vars[p]] = (code >> p) & 1;
    }
    return assignment;
  }
  return std::nullopt;
}

}  // namespace coct
