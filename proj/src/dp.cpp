#include "coct/dp.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "coct/error.hpp"
#include "coct/gf2poly.hpp"

namespace coct {

int WeightAssignment::max_at(int node) const {
  const auto& v = values[node];
  return *std::max_element(v.begin(), v.end());
}

WeightAssignment sample_weights(const CliqueExpression& e, std::uint64_t seed, std::uint64_t trial) {
  const auto sets = node_sets(e);
  WeightAssignment wf;
  wf.W = std::max<int>(1, 8 * static_cast<int>(sets.wnodes.size()));
  wf.values.assign(e.size(), {0, 0, 0, 0});
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> dist(1, wf.W);
  for (int x : sets.wnodes) {
    for (auto& value : wf.values[x]) value = dist(rng);
  }
  return wf;
}

StateSpace::StateSpace(int k) : k_(k), size_(num_states(k)) {
  std::uint32_t ncs = 1;
  std::uint32_t ncol = 1;
  for (int i = 0; i < k; ++i) {
    ncs *= 3;
    ncol *= 4;
  }
  cs_.resize(ncs);
  xpart_.resize(ncs);
  for (std::uint32_t cs = 0; cs < ncs; ++cs) {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint64_t part = 0;
    std::uint64_t place = 1;
    for (int i = 0, rest = static_cast<int>(cs); i < k; ++i, rest /= 3) {
      const int t = rest % 3;
      if (t >= 1) x |= 1U << i;
      if (t == 2) y |= 1U << i;
      part += place * static_cast<std::uint64_t>(4 * t);
      place *= kL0Size;
    }
    cs_[cs] = CsPattern(x, y);
    xpart_[cs] = part;
  }
  ypart_.resize(ncol);
  for (std::uint32_t col = 0; col < ncol; ++col) {
    std::uint64_t part = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < k; ++i) {
      part += place * ((col >> (2 * i)) & 3U);
      place *= kL0Size;
    }
    ypart_[col] = part;
  }
  state_cs_.resize(size_);
  state_col_.resize(size_);
  for (std::uint32_t cs = 0; cs < ncs; ++cs) {
    for (std::uint32_t col = 0; col < ncol; ++col) {
      const auto s = state(cs, col);
      state_cs_[s] = cs;
      state_col_[s] = col;
    }
  }

  const auto pairs = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  join_.resize(pairs);
  relabel_cs_.resize(pairs);
  relabel_col_.resize(pairs);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      auto& effects = join_[pair(i, j)];
      auto& rcs = relabel_cs_[pair(i, j)];
      effects.resize(ncs);
      rcs.resize(ncs);
      for (std::uint32_t cs = 0; cs < ncs; ++cs) {
        const Pattern p = cs_[cs].to_pattern();
        rcs[cs] = cs_index(CsPattern(pattern_relabel(p, i, j)));
        const Pattern added = patadd(p, i, j);
        for (int l = 1; l <= 4; ++l) {
          const auto acted = action(added, l);
          if (!acted) continue;
          for (const auto& q : parrep(*acted)) {
            effects[cs].push_back({static_cast<std::uint8_t>(l), cs_index(CsPattern(q))});
          }
        }
      }
      auto& rcol = relabel_col_[pair(i, j)];
      rcol.resize(ncol);
      for (std::uint32_t col = 0; col < ncol; ++col) {
        rcol[col] = static_cast<std::uint32_t>(coloring_relabel(Coloring::from_bits(col), i, j).bits());
      }
    }
  }
}

std::uint32_t StateSpace::cs_index(const CsPattern& p) const {
  std::uint32_t index = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    const std::uint32_t b = 1U << i;
    index = index * 3 + ((p.zero_labels() & b) ? 2U : (p.labels() & b) ? 1U : 0U);
  }
  if ((p.labels() >> k_) != 0) throw InternalError("CS-pattern label above width");
  return index;
}

const std::vector<StateSpace::Effect>& StateSpace::join_effects(int i, int j, std::uint32_t cs) const {
  return join_[pair(i, j)][cs];
}

const StateSpace& StateSpace::get(int k) {
  if (k < 1 || k > kMaxSolverWidth) {
    throw InputError("solver supports widths 1.." + std::to_string(kMaxSolverWidth) + ", got " + std::to_string(k));
  }
  static std::mutex mutex;
  static std::array<std::unique_ptr<StateSpace>, kMaxSolverWidth + 1> cache;
  std::lock_guard lock(mutex);
  if (!cache[k]) cache[k].reset(new StateSpace(k));
  return *cache[k];
}

DPTable::DPTable(int k, int bmax, int wmax)
    : k_(k),
      bmax_(bmax),
      wmax_(wmax),
      states_(coct::num_states(k)),
      slice_words_(static_cast<std::size_t>(wmax) / 64 + 2),
      row_words_(slice_words_ * static_cast<std::size_t>(bmax + 1)),
      data_(states_ * row_words_, 0) {
  if (bmax < 0 || wmax < 0) throw InternalError("negative table range");
}

bool DPTable::get(std::uint64_t state, int b, int w) const {
  if (b < 0 || b > bmax_ || w < 0 || w > wmax_) return false;
  return (slice(state, b)[w >> 6] >> (w & 63)) & 1U;
}

void DPTable::flip(std::uint64_t state, int b, int w) {
  if (b < 0 || b > bmax_ || w < 0 || w > wmax_) throw InternalError("table entry out of range");
  slice(state, b)[w >> 6] ^= std::uint64_t{1} << (w & 63);
}

GF2Vector DPTable::vector_at(int b, int w) const {
  GF2Vector out(states_);
  for (std::uint64_t s = 0; s < states_; ++s) {
    if (get(s, b, w)) out.flip(s);
  }
  return out;
}

bool DPTable::row_is_zero(std::uint64_t state) const {
  const auto* r = row(state);
  return std::all_of(r, r + row_words_, [](std::uint64_t w) { return w == 0; });
}

DPTable table_introduce(const CliqueExpression& e, int node, int v0, const WeightAssignment& wf, int bhat) {
  const auto& n = e.node(node);
  if (n.kind != NodeKind::introduce) throw InternalError("table_introduce on a non-introduce node");
  const auto& space = StateSpace::get(e.width());
  const int i = n.second;
  DPTable t(e.width(), std::min(bhat, 1), wf.max_at(node));
  const Pattern p = n.first == v0 ? Pattern({1U | (1U << i)}) : Pattern({1U, 1U << i});
  if (t.bmax() >= 1) {
    const std::uint32_t noc = 0;
    t.flip(space.state(space.cs_index(CsPattern(forget(p, i))), noc), 1, wf(node, 1));
    t.flip(space.state(space.cs_index(CsPattern(fix(p, i))), noc), 1, wf(node, 2));
  }
  const auto black = static_cast<std::uint32_t>(Coloring::single(i, Color::black).bits());
  const auto white = static_cast<std::uint32_t>(Coloring::single(i, Color::white).bits());
  t.flip(space.state(0, black), 0, wf(node, 3));
  t.flip(space.state(0, white), 0, wf(node, 4));
  return t;
}

DPTable table_relabel(const DPTable& child, int i, int j) {
  const auto& space = StateSpace::get(child.k());
  DPTable out(child.k(), child.bmax(), child.wmax());
  const std::size_t words = child.row_words();
  for (std::uint64_t s = 0; s < child.num_states(); ++s) {
    if (child.row_is_zero(s)) continue;
    const auto target = space.state(space.relabel_cs(i, j, space.cs_of(s)), space.relabel_col(i, j, space.col_of(s)));
    const auto* src = child.row(s);
    auto* dst = out.row(target);
    for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
  }
  return out;
}

DPTable table_join(const DPTable& child, int i, int j, int node, const WeightAssignment& wf) {
  const auto& space = StateSpace::get(child.k());
  DPTable out(child.k(), child.bmax(), child.wmax() + wf.max_at(node));
  for (std::uint64_t s = 0; s < child.num_states(); ++s) {
    if (child.row_is_zero(s)) continue;
    const auto col = Coloring::from_bits(space.col_of(s));
    if (!color_consistent(col[i], col[j])) continue;
    for (const auto& effect : space.join_effects(i, j, space.cs_of(s))) {
      const auto target = space.state(effect.cs, space.col_of(s));
      const auto shift = static_cast<std::size_t>(wf(node, effect.l));
      for (int b = 0; b <= child.bmax(); ++b) {
        const auto* src = child.slice(s, b);
        const auto n = significant_words(src, child.slice_words());
        if (n != 0) xor_shifted(out.slice(target, b), src, n, shift);
      }
    }
  }
  return out;
}

DPTable table_union(DPTable&& left, DPTable&& right, int bhat, Exec exec) {
  const int k = left.k();
  DPTable out(k, std::min(bhat, left.bmax() + right.bmax()), left.wmax() + right.wmax());
  zeta_rows(left.data(), k, left.row_words(), exec);
  zeta_rows(right.data(), k, right.row_words(), exec);

  const auto product = [&](std::uint64_t s) {
    for (int b1 = 0; b1 <= left.bmax() && b1 <= out.bmax(); ++b1) {
      const auto* a = left.slice(s, b1);
      const auto na = significant_words(a, left.slice_words());
      if (na == 0) continue;
      for (int b2 = 0; b2 <= right.bmax() && b1 + b2 <= out.bmax(); ++b2) {
        const auto* b = right.slice(s, b2);
        const auto nb = significant_words(b, right.slice_words());
        if (nb != 0) clmul_accumulate(out.slice(s, b1 + b2), a, na, b, nb);
      }
    }
  };
  const auto states = static_cast<long long>(out.num_states());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long s = 0; s < states; ++s) product(static_cast<std::uint64_t>(s));
  } else {
    for (long long s = 0; s < states; ++s) product(static_cast<std::uint64_t>(s));
  }
  mobius_rows(out.data(), k, out.row_words(), exec);
  return out;
}

DPTable table_union_naive(const DPTable& left, const DPTable& right, int bhat) {
  const int k = left.k();
  DPTable out(k, std::min(bhat, left.bmax() + right.bmax()), left.wmax() + right.wmax());
  for (int b1 = 0; b1 <= left.bmax(); ++b1) {
    for (int w1 = 0; w1 <= left.wmax(); ++w1) {
      const auto a = left.vector_at(b1, w1);
      if (a.count() == 0) continue;
      for (int b2 = 0; b2 <= right.bmax() && b1 + b2 <= out.bmax(); ++b2) {
        for (int w2 = 0; w2 <= right.wmax(); ++w2) {
          const auto b = right.vector_at(b2, w2);
          if (b.count() == 0) continue;
          const auto c = vee_product_naive(a, b, k);
          for (std::uint64_t s = 0; s < out.num_states(); ++s) {
            if (c.get(s)) out.flip(s, b1 + b2, w1 + w2);
          }
        }
      }
    }
  }
  return out;
}

DPTable compute_table(const CliqueExpression& e, int node, int v0, int bhat, const WeightAssignment& wf, Exec exec) {
  if (bhat < 0) throw InputError("budget must be non-negative");
  StateSpace::get(e.width());
  std::vector<std::optional<DPTable>> tables(e.size());
  std::vector<int> order;
  // Postorder of the subtree: reversed (node, right, left) preorder.
  std::vector<int> stack{node};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    const auto& n = e.node(x);
    if (n.left >= 0) stack.push_back(n.left);
    if (n.right >= 0) stack.push_back(n.right);
  }
  std::reverse(order.begin(), order.end());

  for (int x : order) {
    const auto& n = e.node(x);
    switch (n.kind) {
      case NodeKind::introduce:
        tables[x] = table_introduce(e, x, v0, wf, bhat);
        break;
      case NodeKind::relabel:
        tables[x] = table_relabel(*tables[n.left], n.first, n.second);
        tables[n.left].reset();
        break;
      case NodeKind::join:
        tables[x] = table_join(*tables[n.left], n.first, n.second, x, wf);
        tables[n.left].reset();
        break;
      case NodeKind::union_:
        tables[x] = table_union(std::move(*tables[n.left]), std::move(*tables[n.right]), bhat, exec);
        tables[n.left].reset();
        tables[n.right].reset();
        break;
    }
  }
  return std::move(*tables[node]);
}

std::vector<int> witnessed_budgets(const DPTable& root_table) {
  const auto& space = StateSpace::get(root_table.k());
  std::vector<int> out;
  for (int b = 1; b <= root_table.bmax(); ++b) {
    bool found = false;
    for (std::uint32_t col = 0; col < space.num_colorings() && !found; ++col) {
      const auto* slice = root_table.slice(space.state(0, col), b);
      found = significant_words(slice, root_table.slice_words()) != 0;
    }
    if (found) out.push_back(b);
  }
  return out;
}

std::vector<int> run_fixed_root(const CliqueExpression& e, int v0, int bhat, const WeightAssignment& wf, Exec exec) {
  return witnessed_budgets(compute_table(e, e.root(), v0, bhat, wf, exec));
}

namespace {

SolveResult run_trials(const CliqueExpression& e, int bhat, const SolveOptions& options, bool stop_at_first) {
  if (bhat < 0) throw InputError("budget must be non-negative");
  if (options.trials < 1) throw InputError("trials must be at least 1");
  SolveResult result;
  if (is_bipartite(evaluate(e))) {
    result.yes = true;
    result.bipartite = true;
    return result;
  }
  int cap = bhat;
  for (int trial = 0; trial < options.trials && cap >= 1; ++trial) {
    ++result.trials_run;
    const auto wf = sample_weights(e, options.seed, static_cast<std::uint64_t>(trial));
    for (int v0 = 1; v0 <= e.num_vertices() && cap >= 1; ++v0) {
      ++result.runs;
      const auto budgets = run_fixed_root(e, v0, cap, wf, options.exec);
      if (budgets.empty()) continue;
      result.witnessed = budgets.front();
      result.yes = true;
      if (stop_at_first) return result;
      cap = budgets.front() - 1;
    }
  }
  return result;
}

}  // namespace

SolveResult solve(const CliqueExpression& e, int bhat, const SolveOptions& options) {
  return run_trials(e, bhat, options, true);
}

SolveResult solve_min_budget(const CliqueExpression& e, int max_bhat, const SolveOptions& options) {
  return run_trials(e, max_bhat, options, false);
}

}  // namespace coct
