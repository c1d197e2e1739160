#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coct/clique_expr.hpp"
#include "coct/lattice.hpp"

namespace coct {

inline constexpr int kMaxSolverWidth = 6;

/// wf(x, l) for every introduce and join node x and l in 1..4.
struct WeightAssignment {
  int W = 1;
  std::vector<std::array<int, 4>> values;  // indexed by node id, zero elsewhere

  int operator()(int node, int l) const { return values[node][l - 1]; }
  int max_at(int node) const;
};

/// W = 8 |wnodes|; values uniform in [1, W], drawn in preorder of the
/// wnodes from a generator seeded with (seed, trial).
WeightAssignment sample_weights(const CliqueExpression& e, std::uint64_t seed, std::uint64_t trial = 0);

/// Index tables for the 12^k states shared by every node of a run.
///   cs index:  sum of t_i 3^(i-1), t_i = 0 (absent), 1 (label only), 2 (in Z)
///   col index: the packed Coloring bits
///   state:     xpart(cs) + ypart(col)
class StateSpace {
 public:
  struct Effect {
    std::uint8_t l;
    std::uint32_t cs;
  };

  /// Built once per k and cached.
  static const StateSpace& get(int k);

  int k() const { return k_; }
  std::uint64_t size() const { return size_; }
  std::uint32_t num_cs() const { return static_cast<std::uint32_t>(cs_.size()); }
  std::uint32_t num_colorings() const { return static_cast<std::uint32_t>(ypart_.size()); }

  std::uint32_t cs_of(std::uint64_t state) const { return state_cs_[state]; }
  std::uint32_t col_of(std::uint64_t state) const { return state_col_[state]; }
  std::uint64_t state(std::uint32_t cs, std::uint32_t col) const { return xpart_[cs] + ypart_[col]; }
  const CsPattern& cs_pattern(std::uint32_t cs) const { return cs_[cs]; }
  std::uint32_t cs_index(const CsPattern& p) const;

  /// For a join on labels (i, j): the (l, q) pairs with q in
  /// parrep(action(patadd(p, i, j), l)), already reduced mod 2.
  const std::vector<Effect>& join_effects(int i, int j, std::uint32_t cs) const;
  std::uint32_t relabel_cs(int i, int j, std::uint32_t cs) const { return relabel_cs_[pair(i, j)][cs]; }
  std::uint32_t relabel_col(int i, int j, std::uint32_t col) const { return relabel_col_[pair(i, j)][col]; }

 private:
  explicit StateSpace(int k);
  std::size_t pair(int i, int j) const { return static_cast<std::size_t>((i - 1) * k_ + (j - 1)); }

  int k_;
  std::uint64_t size_;
  std::vector<CsPattern> cs_;
  std::vector<std::uint64_t> xpart_;
  std::vector<std::uint64_t> ypart_;
  std::vector<std::uint32_t> state_cs_;
  std::vector<std::uint32_t> state_col_;
  std::vector<std::vector<std::vector<Effect>>> join_;
  std::vector<std::vector<std::uint32_t>> relabel_cs_;
  std::vector<std::vector<std::uint32_t>> relabel_col_;
};

/// T[x, b, w] for b in 0..bmax and w in 0..wmax. Storage is state-major:
/// each state owns one row holding, per budget, a GF(2) polynomial in the
/// weight. A slice has one spare word so products never overrun it.
class DPTable {
 public:
  DPTable() = default;
  DPTable(int k, int bmax, int wmax);

  int k() const { return k_; }
  int bmax() const { return bmax_; }
  int wmax() const { return wmax_; }
  std::uint64_t num_states() const { return states_; }
  std::size_t slice_words() const { return slice_words_; }
  std::size_t row_words() const { return row_words_; }

  std::uint64_t* row(std::uint64_t state) { return data_.data() + state * row_words_; }
  const std::uint64_t* row(std::uint64_t state) const { return data_.data() + state * row_words_; }
  std::uint64_t* slice(std::uint64_t state, int b) { return row(state) + static_cast<std::size_t>(b) * slice_words_; }
  const std::uint64_t* slice(std::uint64_t state, int b) const {
    return row(state) + static_cast<std::size_t>(b) * slice_words_;
  }
  std::uint64_t* data() { return data_.data(); }

  bool get(std::uint64_t state, int b, int w) const;
  void flip(std::uint64_t state, int b, int w);
  /// The vector T[x, b, w] over all states; zero outside the stored range.
  GF2Vector vector_at(int b, int w) const;
  bool row_is_zero(std::uint64_t state) const;

  friend bool operator==(const DPTable&, const DPTable&) = default;

 private:
  int k_ = 0;
  int bmax_ = 0;
  int wmax_ = 0;
  std::uint64_t states_ = 0;
  std::size_t slice_words_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> data_;
};

DPTable table_introduce(const CliqueExpression& e, int node, int v0, const WeightAssignment& wf, int bhat);
DPTable table_relabel(const DPTable& child, int i, int j);
DPTable table_join(const DPTable& child, int i, int j, int node, const WeightAssignment& wf);
/// Consumes both children: their rows are transformed in place.
DPTable table_union(DPTable&& left, DPTable&& right, int bhat, Exec exec = Exec::serial);
/// Slice-by-slice convolution through vee_product_naive. Reference only.
DPTable table_union_naive(const DPTable& left, const DPTable& right, int bhat);

/// The table at `node`, computed bottom-up over its subtree.
DPTable compute_table(const CliqueExpression& e, int node, int v0, int bhat, const WeightAssignment& wf,
                      Exec exec = Exec::serial);

/// Budgets b in 1..bhat with T[root, b, w][([0], c)] = 1 for some w, c.
std::vector<int> witnessed_budgets(const DPTable& root_table);
std::vector<int> run_fixed_root(const CliqueExpression& e, int v0, int bhat, const WeightAssignment& wf,
                                Exec exec = Exec::serial);

struct SolveOptions {
  int trials = 1;
  std::uint64_t seed = 0;
  Exec exec = Exec::serial;
};

struct SolveResult {
  bool yes = false;
  bool bipartite = false;
  /// Smallest budget witnessed by any run, if any.
  std::optional<int> witnessed;
  int runs = 0;
  int trials_run = 0;
};

/// Monte-Carlo decision: YES answers are always correct.
SolveResult solve(const CliqueExpression& e, int bhat, const SolveOptions& options);

/// Same runs as solve for every budget up to max_bhat at once: the answer
/// for bhat is YES iff bipartite or the returned minimum is <= bhat. With
/// equal options, agrees with solve for every bhat.
SolveResult solve_min_budget(const CliqueExpression& e, int max_bhat, const SolveOptions& options);

}  // namespace coct
