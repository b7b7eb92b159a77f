#include "riccitree/ricci.hpp"

#include <algorithm>
#include <cmath>

#include "riccitree/error.hpp"

namespace riccitree {

RicciMatrix build_ricci_matrix(const Tree& t) {
  int m = t.m();
  RicciMatrix rm;
  rm.tree = t;
  rm.m.assign(m, std::vector<Rat>(m, 0));
  rm.shift_alpha = 0;
  for (int e = 0; e < m; ++e) {
    auto [x, y] = t.edges[e];
    Rat diag = Rat(1, t.deg[x]) + Rat(1, t.deg[y]);
    diag.canonicalize();
    rm.m[e][e] = -diag;
    if (diag > rm.shift_alpha) rm.shift_alpha = diag;
    // neighbors through x, then through y
    for (int f : t.inc[x])
      if (f != e) rm.m[e][f] = Rat(1, t.deg[x]);
    for (int f : t.inc[y])
      if (f != e) rm.m[e][f] = Rat(1, t.deg[y]);
  }
  return rm;
}

std::vector<std::vector<double>> ricci_matrix_double(const Tree& t) {
  int m = t.m();
  std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
  for (int e = 0; e < m; ++e) {
    auto [x, y] = t.edges[e];
    a[e][e] = -(1.0 / t.deg[x] + 1.0 / t.deg[y]);
    for (int f : t.inc[x])
      if (f != e) a[e][f] = 1.0 / t.deg[x];
    for (int f : t.inc[y])
      if (f != e) a[e][f] = 1.0 / t.deg[y];
  }
  return a;
}

std::vector<std::vector<double>> to_double(const RicciMatrix& rm) {
  std::vector<std::vector<double>> a(rm.m.size(), std::vector<double>(rm.m.size()));
  for (size_t i = 0; i < rm.m.size(); ++i)
    for (size_t j = 0; j < rm.m.size(); ++j) a[i][j] = rm.m[i][j].get_d();
  return a;
}

double shift_alpha_double(const Tree& t) {
  double alpha = 0.0;
  for (auto [x, y] : t.edges)
    alpha = std::max(alpha, 1.0 / t.deg[x] + 1.0 / t.deg[y]);
  return alpha;
}

SchrodingerParts schrodinger_decomposition(const Tree& t) {
  RicciMatrix rm = build_ricci_matrix(t);
  SchrodingerParts parts;
  parts.delta = rm.m;
  parts.v.resize(t.m());
  for (int e = 0; e < t.m(); ++e) {
    auto [x, y] = t.edges[e];
    Rat v = frac(2, t.deg[x]) + frac(2, t.deg[y]) - 2;
    parts.v[e] = v;
    parts.delta[e][e] = rm.m[e][e] + v;  // diagonal becomes 1/d_x + 1/d_y - 2
    if (t.deg[x] >= 2 && t.deg[y] >= 2) {
      parts.vtilde[e] = frac(2 + leaf_edge_count_at(t, x), t.deg[x]) +
                        frac(2 + leaf_edge_count_at(t, y), t.deg[y]) - 2;
    }
  }
  return parts;
}

CurvatureAssignment lly_curvature(const Tree& t, const std::vector<double>& w) {
  if (static_cast<int>(w.size()) != t.m())
    fail(ErrorKind::InvalidParams, "weight vector length != edge count");
  for (double x : w)
    if (!(x > 0.0)) fail(ErrorKind::NonpositiveWeight, "edge weights must be positive");
  CurvatureAssignment ca;
  ca.weights = w;
  ca.s.assign(t.n, 0.0);
  for (int e = 0; e < t.m(); ++e) {
    ca.s[t.edges[e].first] += w[e];
    ca.s[t.edges[e].second] += w[e];
  }
  ca.kappa.resize(t.m());
  for (int e = 0; e < t.m(); ++e) {
    auto [x, y] = t.edges[e];
    ca.kappa[e] = -((ca.s[x] - 2 * w[e]) / (w[e] * t.deg[x]) +
                    (ca.s[y] - 2 * w[e]) / (w[e] * t.deg[y]));
  }
  return ca;
}

std::optional<double> is_einstein(const Tree& t, const std::vector<double>& w, double tol) {
  CurvatureAssignment ca = lly_curvature(t, w);
  double mean = 0.0, amax = 0.0;
  for (double k : ca.kappa) {
    mean += k;
    amax = std::max(amax, std::fabs(k));
  }
  mean /= static_cast<double>(ca.kappa.size());
  double spread = 0.0;
  for (double k : ca.kappa) spread = std::max(spread, std::fabs(k - mean));
  // max(1, max|kappa|) keeps the zero-curvature families from demanding a
  // relative comparison against zero
  if (spread <= tol * std::max(1.0, amax)) return mean;
  return std::nullopt;
}

bool kernel_vector_exact(const Tree& t, const std::vector<long>& w) {
  if (static_cast<int>(w.size()) != t.m())
    fail(ErrorKind::InvalidParams, "weight vector length != edge count");
  for (long x : w)
    if (x <= 0) fail(ErrorKind::NonpositiveWeight, "edge weights must be positive");
  RicciMatrix rm = build_ricci_matrix(t);
  std::vector<Rat> x(w.begin(), w.end());
  for (const Rat& y : mat_vec(rm.m, x))
    if (y != 0) return false;
  return true;
}

}  // namespace riccitree
