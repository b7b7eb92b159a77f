#include "riccitree/wasserstein.hpp"

#include <cmath>

#include "riccitree/error.hpp"

namespace riccitree {

namespace {

// W1 distance between two measures on the tree's vertices under the
// path-length metric induced by the edge weights.  Every coupling must move
// the surplus of one side of each edge across that edge, and on a tree that
// lower bound is achieved, so
//   W1 = sum_f w_f * |net mass on one side of f|.
double w1_tree(const Tree& t, const std::vector<double>& w, const std::vector<double>& diff) {
  // Iterative post-order from vertex 0: accumulate subtree sums of diff.
  std::vector<double> sub(diff);
  std::vector<int> parent(t.n, -1), order;
  order.reserve(t.n);
  std::vector<int> stack = {0};
  parent[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int u : t.adj[v]) {
      if (parent[u] < 0) {
        parent[u] = v;
        stack.push_back(u);
      }
    }
  }
  for (int i = (int)order.size() - 1; i > 0; --i) {
    int v = order[i];
    sub[parent[v]] += sub[v];
  }
  double total = 0.0;
  for (int e = 0; e < t.m(); ++e) {
    auto [a, b] = t.edges[e];
    int child = (parent[b] == a) ? b : a;
    total += w[e] * std::fabs(sub[child]);
  }
  return total;
}

}  // namespace

OracleResult wasserstein_curvature_oracle(const Tree& t, const std::vector<double>& w, int edge,
                                          const std::vector<double>& alphas) {
  const int m = t.m();
  if ((int)w.size() != m)
    fail(ErrorKind::InvalidParams, "need one weight per edge");
  for (double v : w)
    if (!(v > 0.0)) fail(ErrorKind::NonpositiveWeight, "edge weights must be positive");
  if (edge < 0 || edge >= m) fail(ErrorKind::BadEdge, "edge index out of range");
  if (alphas.size() < 2)
    fail(ErrorKind::BadAlpha, "need at least two laziness values to extrapolate");
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0 && alphas[i] < 1.0))
      fail(ErrorKind::BadAlpha, "laziness values must lie strictly between 0 and 1");
    if (i > 0 && !(alphas[i] > alphas[i - 1]))
      fail(ErrorKind::BadAlpha, "laziness values must be strictly increasing");
  }

  auto [x, y] = t.edges[edge];

  OracleResult out;
  for (double alpha : alphas) {
    // diff = mu_x^alpha - mu_y^alpha as a signed vertex measure.  The lazy
    // walk jumps uniformly over neighbors; weights enter only through the
    // transport metric.  This is the convention whose alpha -> 1 limit is the
    // closed-form curvature with the plain vertex degrees in it.
    std::vector<double> diff(t.n, 0.0);
    diff[x] += alpha;
    diff[y] -= alpha;
    for (int z : t.adj[x]) diff[z] += (1.0 - alpha) / t.deg[x];
    for (int z : t.adj[y]) diff[z] -= (1.0 - alpha) / t.deg[y];
    double kappa_alpha = 1.0 - w1_tree(t, w, diff) / w[edge];
    out.per_alpha.emplace_back(alpha, kappa_alpha / (1.0 - alpha));
  }

  // Straight line through the two points closest to alpha = 1, evaluated at
  // the limit: with t_i = 1 - alpha_i, value = v_b + t_b * (v_b - v_a)/(t_a - t_b).
  size_t k = out.per_alpha.size();
  double ta = 1.0 - out.per_alpha[k - 2].first, va = out.per_alpha[k - 2].second;
  double tb = 1.0 - out.per_alpha[k - 1].first, vb = out.per_alpha[k - 1].second;
  out.value = vb + tb * (vb - va) / (ta - tb);
  out.linearity_residual = std::fabs(vb - va);
  return out;
}

}  // namespace riccitree
