#pragma once

#include <utility>
#include <vector>

#include "riccitree/tree.hpp"

namespace riccitree {

// Curvature of one edge measured straight from the definition: lazy random
// walk measures mu_v^alpha (mass alpha at v, the rest split uniformly over
// the neighbors; edge weights act as lengths of the transport metric),
// optimal transport cost between the two endpoint measures,
// kappa_alpha = 1 - W1/d(x,y), then the alpha -> 1 limit of
// kappa_alpha/(1-alpha).  On a tree the ratio is affine in (1-alpha), so two
// sample points determine the limit and their disagreement bounds the error.
struct OracleResult {
  double value = 0.0;               // extrapolated limit
  double linearity_residual = 0.0;  // |difference of the two sample ratios|
  std::vector<std::pair<double, double>> per_alpha;  // (alpha, kappa_alpha/(1-alpha))
};

OracleResult wasserstein_curvature_oracle(const Tree& t, const std::vector<double>& w, int edge,
                                          const std::vector<double>& alphas = {0.90, 0.99});

}  // namespace riccitree
