#include "coct/random_expr.hpp"

#include <algorithm>
#include <numeric>

#include "coct/error.hpp"

namespace coct {

namespace {

struct Generator {
  const RandomExprOptions& opt;
  std::mt19937_64& rng;
  ExpressionBuilder builder;
  std::vector<int> ids;
  std::size_t next_id = 0;

  int label() { return std::uniform_int_distribution<int>(1, opt.k)(rng); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng); }

  std::pair<int, int> distinct_labels() {
    const int a = label();
    int b = std::uniform_int_distribution<int>(1, opt.k - 1)(rng);
    if (b >= a) ++b;
    return {a, b};
  }

  int decorate(int node) {
    if (opt.k < 2) return node;
    for (int round = 0; round < 2; ++round) {
      if (chance(opt.join_rate)) {
        auto [a, b] = distinct_labels();
        node = builder.join(a, b, node);
      }
      if (chance(opt.relabel_rate)) {
        auto [a, b] = distinct_labels();
        node = builder.relabel(a, b, node);
      }
    }
    return node;
  }

  int leaf() { return builder.introduce(ids[next_id++], label()); }

  int build(int count) {
    if (count == 1) return leaf();
    int left = 0;
    int right = 0;
    if (opt.linear) {
      left = build(count - 1);
      right = leaf();
    } else {
      const int split = std::uniform_int_distribution<int>(1, count - 1)(rng);
      left = build(split);
      right = build(count - split);
    }
    return decorate(builder.unite(left, right));
  }
};

}  // namespace

CliqueExpression random_expression(const RandomExprOptions& options, std::mt19937_64& rng) {
  if (options.n < 1) throw InputError("need at least one vertex");
  if (options.k < 1) throw InputError("need at least one label");
  Generator gen{options, rng, {}, std::vector<int>(static_cast<std::size_t>(options.n)), 0};
  std::iota(gen.ids.begin(), gen.ids.end(), 1);
  std::shuffle(gen.ids.begin(), gen.ids.end(), rng);
  const int root = gen.build(options.n);
  return std::move(gen.builder).finish(root);
}

}  // namespace coct
