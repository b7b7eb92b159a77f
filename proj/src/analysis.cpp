#include "riccitree/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "riccitree/canonical.hpp"
#include "riccitree/enumerate.hpp"
#include "riccitree/error.hpp"
#include "riccitree/ricci.hpp"
#include "riccitree/spectral.hpp"

namespace riccitree {

namespace {

constexpr double kSignTol = 1e-10;  // lambda trichotomy threshold
constexpr double kTieRel = 1e-9;    // extremal-tie tolerance, relative to max|w|

std::vector<double> weighted_degree_sums(const Tree& t, const std::vector<double>& w) {
  std::vector<double> s(t.n, 0.0);
  for (int e = 0; e < t.m(); ++e) {
    s[t.edges[e].first] += w[e];
    s[t.edges[e].second] += w[e];
  }
  return s;
}

int other_end(const Tree& t, int e, int v) {
  return t.edges[e].first == v ? t.edges[e].second : t.edges[e].first;
}

}  // namespace

BoundsReport eigenvalue_bounds(const Tree& t) {
  SchrodingerParts parts = schrodinger_decomposition(t);
  BoundsReport rep;
  rep.lambda_max = perron_eigenpair(t).lambda_max;
  rep.upper = -1e300;
  for (const Rat& v : parts.v) rep.upper = std::max(rep.upper, -to_double(v));
  rep.lower_applicable = !parts.vtilde.empty();
  if (rep.lower_applicable) {
    rep.lower = 1e300;
    for (const auto& [e, vt] : parts.vtilde) rep.lower = std::min(rep.lower, -to_double(vt));
    rep.lower_ok = rep.lower <= rep.lambda_max + 1e-9;
  } else {
    rep.lower = 0.0;
    rep.lower_ok = true;
  }
  rep.upper_ok = rep.lambda_max <= rep.upper + 1e-9;
  return rep;
}

double regular_ball_limit(int d) {
  if (d < 3) fail(ErrorKind::InvalidParams, "regular_ball_limit requires d >= 3");
  return 1.0 - 4.0 / d + 2.0 * std::sqrt((double)(d - 1)) / d;
}

AttachmentDelta attachment_delta(const Tree& before, const Tree& after) {
  AttachmentDelta d;
  d.lambda_before = perron_eigenpair(before).lambda_max;
  d.lambda_after = perron_eigenpair(after).lambda_max;
  d.delta = d.lambda_after - d.lambda_before;
  return d;
}

AttachmentDelta attachment_delta_leaf(const Tree& t, int v) {
  return attachment_delta(t, attach_leaf(t, v));
}

AttachmentDelta attachment_delta_subdivide(const Tree& t, int u, int v) {
  return attachment_delta(t, subdivide_edge(t, u, v));
}

AttachmentDelta attachment_delta_tree(const Tree& t, int v, const Tree& h,
                                      const std::vector<int>& anchors) {
  return attachment_delta(t, attach_tree(t, v, h, anchors));
}

bool check_leaf_attach_increase_negative(const Tree& t) {
  if (is_star(t))
    fail(ErrorKind::PreconditionNotMet, "leaf-attach increase is stated for non-star trees");
  double lambda = perron_eigenpair(t).lambda_max;
  if (lambda > kSignTol)
    fail(ErrorKind::PreconditionNotMet, "leaf-attach increase needs lambda_max <= 0");
  for (int v = 0; v < t.n; ++v) {
    double after = perron_eigenpair(attach_leaf(t, v)).lambda_max;
    if (!(after > lambda + 1e-10)) return false;
  }
  return true;
}

ChainCertificate verify_directional_chain(const Tree& t, const std::vector<double>& w,
                                          double lambda, int start_u, int start_v) {
  int e = edge_index(t, start_u, start_v);
  if (e < 0) fail(ErrorKind::BadEdge, "start edge is not in the tree");
  if ((int)w.size() != t.m()) fail(ErrorKind::InvalidParams, "need one weight per edge");
  if (!(lambda < 0))
    fail(ErrorKind::PreconditionNotMet, "directional chain needs lambda < 0");
  std::vector<double> s = weighted_degree_sums(t, w);
  if (!(s[start_u] < 2.0 * w[e]))
    fail(ErrorKind::PreconditionNotMet, "directional chain needs S_u < 2*w_e at the start");

  ChainCertificate cert;
  cert.start_edge = e;
  cert.toward = start_v;
  cert.ok = true;
  // Fan out from start_u away from start_v; at each vertex the incoming
  // edge's weight must dominate twice the outgoing weighted-degree share.
  std::deque<std::pair<int, int>> frontier;  // (vertex, incoming edge)
  frontier.emplace_back(start_u, e);
  while (!frontier.empty()) {
    auto [p, in] = frontier.front();
    frontier.pop_front();
    for (int out : t.inc[p]) {
      if (out == in) continue;
      ChainStep step;
      step.vertex = p;
      step.in_edge = in;
      step.out_edge = out;
      step.s = s[p];
      step.w_in = w[in];
      step.w_out = w[out];
      step.in_ok = s[p] < 2.0 * w[in];
      step.out_ok = s[p] > 2.0 * w[out];
      step.decrease_ok = w[out] < w[in];
      if (!(step.in_ok && step.out_ok && step.decrease_ok)) cert.ok = false;
      cert.steps.push_back(step);
      int q = other_end(t, out, p);
      if (t.deg[q] > 1) frontier.emplace_back(q, out);
    }
  }
  return cert;
}

StructureReport locate_extremal_edges(const Tree& t, const std::vector<double>& w, double lambda) {
  if ((int)w.size() != t.m()) fail(ErrorKind::InvalidParams, "need one weight per edge");
  StructureReport rep;
  double wmax = *std::max_element(w.begin(), w.end());
  double wmin = *std::min_element(w.begin(), w.end());
  double tol = kTieRel * std::fabs(wmax);
  for (int e = 0; e < t.m(); ++e) {
    if (w[e] >= wmax - tol) rep.max_edges.push_back(e);
    if (w[e] <= wmin + tol) rep.min_edges.push_back(e);
  }
  rep.max_on_internal = true;
  for (int e : rep.max_edges)
    if (is_leaf_edge(t, e)) rep.max_on_internal = false;
  rep.min_on_leaf = true;
  for (int e : rep.min_edges)
    if (!is_leaf_edge(t, e)) rep.min_on_leaf = false;
  (void)lambda;  // classification itself is sign-independent; callers gate on it
  return rep;
}

bool check_leaf_local(const Tree& t, const std::vector<double>& w) {
  if ((int)w.size() != t.m()) fail(ErrorKind::InvalidParams, "need one weight per edge");
  double tol = kTieRel * std::fabs(*std::max_element(w.begin(), w.end()));
  for (int v = 0; v < t.n; ++v) {
    double leaf_lo = 1e300, leaf_hi = -1e300, internal_lo = 1e300;
    for (int e : t.inc[v]) {
      if (is_leaf_edge(t, e)) {
        leaf_lo = std::min(leaf_lo, w[e]);
        leaf_hi = std::max(leaf_hi, w[e]);
      } else {
        internal_lo = std::min(internal_lo, w[e]);
      }
    }
    if (leaf_hi < leaf_lo) continue;  // no leaf edges here
    if (leaf_hi - leaf_lo > tol) return false;
    if (internal_lo < 1e300 && !(leaf_hi < internal_lo)) return false;
  }
  return true;
}

StructureReport check_radial_monotonicity(const Tree& t, const std::vector<double>& w,
                                          double lambda) {
  if (is_star(t))
    fail(ErrorKind::PreconditionNotMet, "radial monotonicity is stated for non-star trees");
  if (!(lambda < 0))
    fail(ErrorKind::PreconditionNotMet, "radial monotonicity needs lambda < 0");
  StructureReport rep = locate_extremal_edges(t, w, lambda);
  rep.leaf_local_ok = check_leaf_local(t, w);
  rep.radial_monotone = rep.max_edges.size() <= 2;

  if (rep.max_edges.size() == 2) {
    auto [a1, b1] = t.edges[rep.max_edges[0]];
    auto [a2, b2] = t.edges[rep.max_edges[1]];
    int shared = -1;
    if (a1 == a2 || a1 == b2) shared = a1;
    if (b1 == a2 || b1 == b2) shared = b1;
    rep.two_max_share_vertex = shared >= 0;
    if (shared >= 0) {
      rep.shared_vertex_degree = t.deg[shared];
      rep.two_max_share_deg2_vertex = (t.deg[shared] == 2);
    } else {
      rep.two_max_share_deg2_vertex = false;
      rep.radial_monotone = false;
    }
  }

  // Strict decrease outward: multi-source BFS over edge adjacency from the
  // maximal set.  Shortest edge-paths in a tree's line graph never double
  // back, so each first visit is a step of some radial path.
  double tol = kTieRel * std::fabs(w[rep.max_edges[0]]);
  std::vector<int> seen(t.m(), 0);
  std::deque<int> queue;
  for (int e : rep.max_edges) {
    seen[e] = 1;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (int v : {t.edges[g].first, t.edges[g].second}) {
      for (int f : t.inc[v]) {
        if (seen[f]) continue;
        seen[f] = 1;
        if (!(w[g] - w[f] > tol)) rep.radial_monotone = false;
        queue.push_back(f);
      }
    }
  }

  // Directed-chain certificates from every valid orientation of a max edge.
  std::vector<double> s = weighted_degree_sums(t, w);
  for (int e : rep.max_edges) {
    auto [x, y] = t.edges[e];
    if (s[x] < 2.0 * w[e]) {
      rep.chain_certificates.push_back(verify_directional_chain(t, w, lambda, x, y));
      if (!rep.chain_certificates.back().ok) rep.radial_monotone = false;
    }
    if (s[y] < 2.0 * w[e]) {
      rep.chain_certificates.push_back(verify_directional_chain(t, w, lambda, y, x));
      if (!rep.chain_certificates.back().ok) rep.radial_monotone = false;
    }
  }
  return rep;
}

TreeScanRecord scan_one(const Tree& t) {
  TreeScanRecord rec;
  rec.canonical_code = canonical_code(t);
  rec.n = t.n;
  rec.caterpillar = is_caterpillar(t);

  PerronResult p = perron_eigenpair(t);
  rec.lambda_max = p.lambda_max;
  const std::vector<double>& w = p.w_maxnorm;
  bool star = is_star(t);

  // Constant curvature with kappa = -lambda
  CurvatureAssignment ca = lly_curvature(t, w);
  double kmax = 0.0, mean = 0.0;
  for (double k : ca.kappa) {
    kmax = std::max(kmax, std::fabs(k));
    mean += k;
  }
  mean /= ca.kappa.size();
  double spread = 0.0;
  for (double k : ca.kappa) spread = std::max(spread, std::fabs(k - mean));
  if (spread > 1e-9 * std::max(1.0, kmax) || std::fabs(mean + rec.lambda_max) > 1e-9)
    rec.violations.push_back("einstein");

  // Bounds sandwich (v and vtilde straight from degrees; the rational path
  // is exercised by eigenvalue_bounds' own tests)
  if (!star) {
    double upper = -1e300, lower = 1e300;
    for (int e = 0; e < t.m(); ++e) {
      auto [x, y] = t.edges[e];
      upper = std::max(upper, 2.0 - 2.0 / t.deg[x] - 2.0 / t.deg[y]);
      if (t.deg[x] >= 2 && t.deg[y] >= 2) {
        double vt = (2.0 + leaf_edge_count_at(t, x)) / t.deg[x] +
                    (2.0 + leaf_edge_count_at(t, y)) / t.deg[y] - 2.0;
        lower = std::min(lower, -vt);
      }
    }
    if (rec.lambda_max > upper + 1e-9) rec.violations.push_back("bounds-upper");
    if (lower < 1e300 && rec.lambda_max < lower - 1e-9) rec.violations.push_back("bounds-lower");
  }

  if (rec.lambda_max < -kSignTol && !rec.caterpillar) rec.violations.push_back("caterpillar");

  StructureReport ext = locate_extremal_edges(t, w, rec.lambda_max);
  if (!star && !ext.max_on_internal) rec.violations.push_back("max-on-internal");
  if (rec.lambda_max <= kSignTol && !ext.min_on_leaf) rec.violations.push_back("min-on-leaf");
  if (!check_leaf_local(t, w)) rec.violations.push_back("leaf-local");

  if (!star && rec.lambda_max < -kSignTol) {
    StructureReport rad = check_radial_monotonicity(t, w, rec.lambda_max);
    if (rad.max_edges.size() > 2) rec.violations.push_back("max-count");
    if (!rad.two_max_share_vertex) rec.violations.push_back("max-adjacency");
    if (rad.max_edges.size() <= 2 && rad.two_max_share_vertex && !rad.radial_monotone)
      rec.violations.push_back("chain");
  }
  return rec;
}

std::vector<TreeScanRecord> scan_trees(int min_n, int max_n, bool parallel) {
  std::vector<TreeScanRecord> out;
  for (int n = std::max(2, min_n); n <= max_n; ++n) {
    std::vector<std::vector<std::pair<int, int>>> batch;
    for_each_free_tree_edges(n, [&](const std::vector<std::pair<int, int>>& edges) {
      batch.push_back(edges);
    });
    size_t base = out.size();
    out.resize(base + batch.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (long i = 0; i < (long)batch.size(); ++i)
        out[base + i] = scan_one(make_tree(n, batch[i]));
    } else {
      for (size_t i = 0; i < batch.size(); ++i)
        out[base + i] = scan_one(make_tree(n, batch[i]));
    }
  }
  return out;
}

CaterpillarScanReport caterpillar_theorem_scan(int max_n) {
  if (max_n > 14) fail(ErrorKind::OutOfRange, "caterpillar scan is sized for n <= 14");
  CaterpillarScanReport rep;
  for (int n = 2; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      ++rep.trees_checked;
      bool cat = is_caterpillar(t);
      double lambda = perron_eigenpair(t).lambda_max;
      if (cat) ++rep.caterpillars;
      if (lambda < -kSignTol) {
        ++rep.negative_lambda;
        if (!cat) {
          TreeScanRecord rec;
          rec.canonical_code = canonical_code(t);
          rec.n = n;
          rec.lambda_max = lambda;
          rec.caterpillar = false;
          rec.violations.push_back("caterpillar");
          rep.violations.push_back(rec);
        }
      }
    });
  }
  return rep;
}

}  // namespace riccitree
