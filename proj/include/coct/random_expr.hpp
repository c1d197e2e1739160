#pragma once

#include <random>

#include "coct/clique_expr.hpp"

namespace coct {

struct RandomExprOptions {
  int n = 6;
  int k = 3;
  /// Chance of each join / relabel attempt after a union.
  double join_rate = 0.6;
  double relabel_rate = 0.3;
  /// Every union adds a single introduced vertex.
  bool linear = false;
};

/// A random k-expression on vertices 1..n (shuffled ids).
CliqueExpression random_expression(const RandomExprOptions& options, std::mt19937_64& rng);

}  // namespace coct
