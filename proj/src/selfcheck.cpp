#include "coct/selfcheck.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "coct/dp.hpp"
#include "coct/error.hpp"
#include "coct/lattice.hpp"
#include "coct/oracle.hpp"
#include "coct/pattern.hpp"
#include "coct/random_expr.hpp"

namespace coct {

namespace {

CheckResult check(std::string name, std::size_t cases, std::size_t failures) {
  return {std::move(name), failures == 0,
          std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

std::vector<Pattern> complete_only(const std::vector<Pattern>& all) {
  std::vector<Pattern> out;
  for (const auto& p : all) {
    if (p.is_complete()) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(int max_k) {
  if (max_k < 1 || max_k > 3) throw InputError("selftest supports --max-k in 1..3");
  std::vector<CheckResult> results;

  std::size_t cases = 0;
  std::size_t failures = 0;
  for (int k = 1; k <= max_k; ++k) {
    const auto all = all_patterns(k);
    for (const auto& p : all) {
      ++cases;
      if (pattern_join(p, Pattern()) != p) ++failures;
    }
  }
  results.push_back(check("join identity", cases, failures));

  cases = failures = 0;
  for (int k = 1; k <= max_k; ++k) {
    const auto complete = complete_only(all_patterns(k));
    for (const auto& p : complete) {
      for (const auto& q : complete) {
        ++cases;
        std::size_t count = 0;
        for (const auto& r : parrep(p)) count += consistent(r, q) ? 1 : 0;
        if ((count % 2 == 1) != consistent(p, q)) ++failures;
      }
    }
  }
  results.push_back(check("parity representation", cases, failures));

  cases = failures = 0;
  for (int k = 1; k <= max_k; ++k) {
    const auto all = all_patterns(k);
    for (const auto& p : all) {
      if (std::popcount(p.inc()) > 2) continue;
      std::vector<Pattern> reps;
      for (int l = 1; l <= 4; ++l) {
        if (auto a = action(p, l)) reps.push_back(*a);
      }
      for (const auto& q : all) {
        ++cases;
        bool any = false;
        for (const auto& r : reps) any = any || consistent(r, q);
        if (any != consistent(p, q)) ++failures;
      }
    }
  }
  results.push_back(check("actions represent", cases, failures));

  cases = failures = 0;
  const int lattice_k = std::min(max_k, 2);
  const auto n = num_states(lattice_k);
  for (std::uint64_t a = 0; a < n; ++a) {
    const auto [pa, ca] = rho_inv(a, lattice_k);
    for (std::uint64_t b = 0; b < n; ++b) {
      const auto [pb, cb] = rho_inv(b, lattice_k);
      ++cases;
      const bool ordered = (pa.labels() & ~pb.labels()) == 0 && (pa.zero_labels() & ~pb.zero_labels()) == 0 &&
                           coloring_leq(ca, cb);
      const auto joined = rho(CsPattern(pattern_union(pa.to_pattern(), pb.to_pattern())),
                              coloring_join(ca, cb), lattice_k);
      if (ordered != state_leq(a, b, lattice_k) || joined != state_join(a, b, lattice_k)) ++failures;
    }
  }
  results.push_back(check("state isomorphism", cases, failures));

  cases = failures = 0;
  std::mt19937_64 rng(12345);
  for (int k = 1; k <= max_k; ++k) {
    for (int round = 0; round < 20; ++round) {
      const auto a = GF2Vector::random(num_states(k), rng);
      const auto b = GF2Vector::random(num_states(k), rng);
      ++cases;
      if (vee_product_fast(a, b, k) != vee_product_naive(a, b, k) || mobius(zeta(a, k), k) != a) ++failures;
    }
  }
  results.push_back(check("convolution", cases, failures));

  cases = failures = 0;
  for (int round = 0; round < 30; ++round) {
    RandomExprOptions opt;
    opt.n = 3 + round % 5;
    opt.k = std::min(max_k, 1 + round % 3);
    const auto e = random_expression(opt, rng);
    const auto g = evaluate(e);
    const auto truth = brute_force_solve(g, g.num_vertices());
    const auto result = solve_min_budget(e, g.num_vertices(), {.trials = 12, .seed = static_cast<std::uint64_t>(round)});
    const int expected = truth ? truth->size() : -1;
    const int got = result.bipartite ? 0 : result.witnessed.value_or(-1);
    ++cases;
    if (expected != got) ++failures;
  }
  results.push_back(check("solver agrees with brute force", cases, failures));
  return results;
}

}  // namespace coct
