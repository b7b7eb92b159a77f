#include "riccitree/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <numeric>
#include <sstream>

#include "riccitree/analysis.hpp"
#include "riccitree/canonical.hpp"
#include "riccitree/enumerate.hpp"
#include "riccitree/error.hpp"
#include "riccitree/ricci.hpp"

namespace riccitree {

namespace {

constexpr double kSign = 1e-10;

double lam(const Tree& t) { return perron_eigenpair(t).lambda_max; }

ExperimentRow value_row(std::string params, std::string claim, double computed, double expected,
                        double tol) {
  ExperimentRow r;
  r.params = std::move(params);
  r.claim = std::move(claim);
  r.computed = computed;
  r.expected = expected;
  r.tol = tol;
  r.pass = std::fabs(computed - expected) <= tol;
  return r;
}

ExperimentRow pred_row(std::string params, std::string claim, double computed, bool pass) {
  ExperimentRow r;
  r.params = std::move(params);
  r.claim = std::move(claim);
  r.computed = computed;
  r.pass = pass;
  return r;
}

// ---- double_star_signs ------------------------------------------------------

std::vector<ExperimentRow> run_double_star_signs() {
  std::vector<ExperimentRow> rows;

  // Sign pattern over the grid: lambda is negative, zero, or positive exactly
  // as (m-1)(n-1) is below, at, or above 4.
  int mismatches = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int n = m; n <= 10; ++n) {
      double l = lam(double_star(m, n));
      int rule = (m - 1) * (n - 1) - 4;
      int want = rule == 0 ? 0 : (rule > 0 ? 1 : -1);
      int got = std::fabs(l) <= 1e-9 ? 0 : (l > 0 ? 1 : -1);
      if (want != got) ++mismatches;
    }
  }
  rows.push_back(pred_row("1<=m<=6, m<=n<=10", "sign(lambda) = sign((m-1)(n-1) - 4)",
                          (double)mismatches, mismatches == 0));

  double neg_max = -1e300;
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) neg_max = std::max(neg_max, lam(double_star(m, n)));
  rows.push_back(pred_row("m,n in {1,2}", "lambda < 0 on all four trees", neg_max,
                          neg_max < -kSign));

  rows.push_back(value_row("m=2 n=3", "lambda (the often-quoted -0.069 belongs to this tree)",
                           lam(double_star(2, 3)), -0.069187234959, 1e-9));
  rows.push_back(value_row("m=3 n=3", "lambda = 0", lam(double_star(3, 3)), 0.0, 1e-9));
  rows.push_back(value_row("m=2 n=5", "lambda = 0", lam(double_star(2, 5)), 0.0, 1e-9));

  double pos_min = 1e300;
  for (int m = 4; m <= 10; ++m)
    for (int n = m; n <= 10; ++n) pos_min = std::min(pos_min, lam(double_star(m, n)));
  rows.push_back(pred_row("4<=m<=n<=10", "lambda > 0 throughout", pos_min, pos_min > kSign));

  // Balanced sweep: lambda rises to a single peak at m=n=14, then decays.
  std::vector<double> sweep;
  for (int m = 4; m <= 60; ++m) sweep.push_back(lam(double_star(m, m)));
  int arg = (int)(std::max_element(sweep.begin(), sweep.end()) - sweep.begin()) + 4;
  bool unimodal = true;
  for (int m = 5; m <= 60; ++m) {
    double prev = sweep[m - 5], cur = sweep[m - 4];
    if (m <= arg && !(cur > prev)) unimodal = false;
    if (m > arg && !(cur < prev)) unimodal = false;
  }
  rows.push_back(value_row("m=n in 4..60", "single interior peak at m=n=14", (double)arg, 14.0,
                           0.0));
  rows.back().pass = rows.back().pass && unimodal;
  rows.push_back(value_row("m=n=14", "peak value", sweep[10], 0.187671527091155, 1e-9));
  rows.push_back(value_row("m=n=15", "lambda = 3/16 (exact rational eigenvalue)", sweep[11],
                           0.1875, 1e-12));
  rows.push_back(value_row("m=n=60", "well past the peak, decaying toward 0", sweep[56],
                           0.138784526225093, 1e-9));
  return rows;
}

// ---- d33_subdivision --------------------------------------------------------

std::vector<ExperimentRow> run_d33_subdivision() {
  std::vector<ExperimentRow> rows;
  for (int k = 1; k <= 30; ++k) {
    Tree t = sub_double_star(3, 3, k);
    // leaf edges first (weight 1), then the k+1 central path edges (weight 3)
    std::vector<long> w(6, 1);
    w.insert(w.end(), k + 1, 3);
    ExperimentRow r = value_row("k=" + std::to_string(k),
                                "lambda = 0 with exact kernel (leaves 1, path 3)", lam(t), 0.0,
                                1e-10);
    r.pass = r.pass && kernel_vector_exact(t, w);
    rows.push_back(r);
  }
  return rows;
}

// ---- tmk_table --------------------------------------------------------------

std::vector<ExperimentRow> run_tmk_table() {
  std::vector<ExperimentRow> rows;
  rows.push_back(value_row("m=2 k=0", "equals the 5-path value -1+sqrt(2)/2", lam(tmk(2, 0)),
                           -1.0 + std::sqrt(2.0) / 2.0, 1e-10));
  rows.push_back(value_row("m=2 k=1", "negative", lam(tmk(2, 1)), -0.132211095610, 1e-9));
  rows.push_back(value_row("m=2 k=2", "negative", lam(tmk(2, 2)), -0.060307379214, 1e-9));
  rows.push_back(value_row("m=2 k=3", "negative", lam(tmk(2, 3)), -0.022244334656, 1e-9));
  rows.push_back(value_row("m=2 k=3 cross-check",
                           "the -0.069 sometimes cited here is the double-star D(2,3) value",
                           lam(double_star(2, 3)), -0.069, 5e-3));
  {
    Tree t = tmk(2, 4);
    ExperimentRow r = value_row("m=2 k=4", "lambda = 0 with exact kernel (legs 6,2 leaves 3)",
                                lam(t), 0.0, 1e-10);
    r.pass = r.pass && kernel_vector_exact(t, {6, 2, 6, 2, 3, 3, 3, 3});
    rows.push_back(r);
  }
  double mn = 1e300;
  for (int k = 5; k <= 10; ++k) mn = std::min(mn, lam(tmk(2, k)));
  rows.push_back(pred_row("m=2 k=5..10", "lambda > 0", mn, mn > kSign));

  {
    Tree t = tmk(3, 0);
    ExperimentRow r = value_row("m=3 k=0", "lambda = 0 with exact kernel (legs 3,1)", lam(t),
                                0.0, 1e-10);
    r.pass = r.pass && kernel_vector_exact(t, {3, 1, 3, 1, 3, 1});
    rows.push_back(r);
  }
  mn = 1e300;
  for (int k = 1; k <= 10; ++k) mn = std::min(mn, lam(tmk(3, k)));
  rows.push_back(pred_row("m=3 k=1..10", "lambda > 0", mn, mn > kSign));

  for (int m = 4; m <= 6; ++m) {
    mn = 1e300;
    for (int k = 0; k <= 10; ++k) mn = std::min(mn, lam(tmk(m, k)));
    rows.push_back(pred_row("m=" + std::to_string(m) + " k=0..10", "lambda > 0", mn,
                            mn > kSign));
  }
  return rows;
}

// ---- path_star_zeros --------------------------------------------------------

std::vector<ExperimentRow> run_path_star_zeros() {
  std::vector<ExperimentRow> rows;
  struct ZeroCase {
    int np, ns;
    std::vector<long> kernel;
  };
  // Kernels list path weights from the far end, then the joining edge, then
  // the star's remaining leaves.
  const ZeroCase zeros[] = {
      {3, 10, {3, 9, 15, 5, 5, 5, 5, 5, 5, 5, 5, 5}},
      {4, 7, {3, 9, 15, 21, 7, 7, 7, 7, 7, 7}},
      {5, 6, {1, 3, 5, 7, 9, 3, 3, 3, 3, 3}},
      {8, 5, {1, 3, 5, 7, 9, 11, 13, 15, 5, 5, 5, 5}},
  };
  for (const ZeroCase& z : zeros) {
    Tree t = path_star(z.np, z.ns);
    std::string p = "n_p=" + std::to_string(z.np) + " n_s=" + std::to_string(z.ns);
    ExperimentRow r = value_row(p, "lambda = 0 with exact kernel", lam(t), 0.0, 1e-8);
    r.pass = r.pass && kernel_vector_exact(t, z.kernel);
    rows.push_back(r);
  }

  double mx = -1e300;
  for (int ns = 2; ns <= 16; ++ns) mx = std::max(mx, lam(path_star(2, ns)));
  rows.push_back(pred_row("n_p=2 n_s=2..16", "lambda < 0 throughout", mx, mx < -kSign));

  // Observed sign boundary: largest n_s still negative, per path length.
  const int last_negative[] = {9, 6, 5, 5, 5, 4};  // n_p = 3..8
  for (int np = 3; np <= 8; ++np) {
    int last = 0;
    for (int ns = 2; ns <= 16; ++ns)
      if (lam(path_star(np, ns)) < -1e-8) last = ns;
    rows.push_back(value_row("n_p=" + std::to_string(np),
                             "largest n_s with lambda < -1e-8 (observed boundary)", (double)last,
                             (double)last_negative[np - 3], 0.0));
  }
  for (int np : {6, 7}) {
    double l5 = lam(path_star(np, 5)), l6 = lam(path_star(np, 6));
    rows.push_back(pred_row("n_p=" + std::to_string(np) + " n_s=5->6",
                            "sign flips with no zero in between", l6 - l5,
                            l5 < -1e-8 && l6 > 1e-8));
  }
  return rows;
}

// ---- central_branch_table ---------------------------------------------------

std::vector<ExperimentRow> run_central_branch_table() {
  std::vector<ExperimentRow> rows;
  auto max_over_t = [](int n, int t_lo, int t_hi) {
    double mx = -1e300;
    for (int t = t_lo; t <= t_hi; ++t) mx = std::max(mx, lam(central_branch(n, t)));
    return mx;
  };
  auto min_over_t = [](int n, int t_lo, int t_hi) {
    double mn = 1e300;
    for (int t = t_lo; t <= t_hi; ++t) mn = std::min(mn, lam(central_branch(n, t)));
    return mn;
  };

  for (int n : {3, 4}) {
    double mx = max_over_t(n, 1, 10);
    rows.push_back(pred_row("n=" + std::to_string(n) + " t=1..10", "lambda < 0 for every t", mx,
                            mx < -kSign));
  }
  rows.push_back(value_row("n=4 t=10", "still negative at t=10", lam(central_branch(4, 10)),
                           -0.042903242507, 1e-9));

  {
    double mx = max_over_t(5, 1, 3);
    rows.push_back(pred_row("n=5 t=1..3", "lambda < 0", mx, mx < -kSign));
    Tree t = central_branch(5, 4);
    // path edges (0,1),(1,2),(2,3),(3,4) then four leaves at the middle:
    // the two stubs act as legs, so the zero kernel is the 6,2-leg pattern
    ExperimentRow r = value_row("n=5 t=4", "lambda = 0 with exact kernel", lam(t), 0.0, 1e-10);
    r.pass = r.pass && kernel_vector_exact(t, {2, 6, 6, 2, 3, 3, 3, 3});
    rows.push_back(r);
    rows.push_back(value_row("n=5 t=5", "positive beyond the zero", lam(central_branch(5, 5)),
                             0.013840207467, 1e-9));
    double mn = min_over_t(5, 5, 10);
    rows.push_back(pred_row("n=5 t=5..10", "lambda > 0", mn, mn > kSign));
  }
  {
    double mx = max_over_t(6, 1, 2);
    rows.push_back(pred_row("n=6 t=1..2", "lambda < 0", mx, mx < -kSign));
    rows.push_back(value_row("n=6 t=2", "last negative", lam(central_branch(6, 2)),
                             -0.007034786575, 1e-9));
    rows.push_back(value_row("n=6 t=3", "first positive", lam(central_branch(6, 3)),
                             0.024243916217, 1e-9));
    double mn = min_over_t(6, 3, 10);
    rows.push_back(pred_row("n=6 t=3..10", "lambda > 0", mn, mn > kSign));
  }
  for (int n : {7, 8}) {
    std::string ns = std::to_string(n);
    double exp1 = (n == 7) ? -0.021650997800 : -0.002231264443;
    double exp2 = (n == 7) ? 0.030749425342 : 0.045298682175;
    rows.push_back(value_row("n=" + ns + " t=1", "only negative entry", lam(central_branch(n, 1)),
                             exp1, 1e-9));
    rows.push_back(value_row("n=" + ns + " t=2", "first positive", lam(central_branch(n, 2)),
                             exp2, 1e-9));
    double mn = min_over_t(n, 2, 10);
    rows.push_back(pred_row("n=" + ns + " t=2..10", "lambda > 0", mn, mn > kSign));
  }
  rows.push_back(value_row("n=9 t=1", "already positive at a single extra leaf",
                           lam(central_branch(9, 1)), 0.013108595596, 1e-9));
  rows.push_back(value_row("n=10 t=1", "positive", lam(central_branch(10, 1)), 0.020494393353,
                           1e-9));
  for (int n = 9; n <= 14; ++n) {
    double mn = min_over_t(n, 1, 10);
    rows.push_back(pred_row("n=" + std::to_string(n) + " t=1..10", "lambda > 0 for every t", mn,
                            mn > kSign));
  }
  return rows;
}

// ---- d44_k29 ----------------------------------------------------------------

std::vector<ExperimentRow> run_d44_k29() {
  std::vector<ExperimentRow> rows;
  struct Case {
    int m, k;
    double lam_exp, leaf_exp, min_exp;
    double max_exp;  // < 0 means "not pinned"
  };
  // k = interior path vertices; these counts reproduce the published weight
  // tables (the superscript convention there is one off from the path count).
  const Case cases[] = {
      {4, 30, 0.00774, 0.09947, 0.09145, 0.30226},
      {9, 15, 0.0419, 0.11565, 0.09072, -1.0},
      {19, 15, 0.0515, 0.09539, 0.07024, -1.0},
  };
  for (const Case& c : cases) {
    Tree t = sub_double_star(c.m, c.m, c.k);
    PerronResult p = perron_eigenpair(t);
    const std::vector<double>& w = p.w_l2;  // unit 2-norm, the published scale
    std::string tag = "m=n=" + std::to_string(c.m) + " path through " + std::to_string(c.k) +
                      " interior vertices";
    rows.push_back(value_row(tag, "lambda_max", p.lambda_max, c.lam_exp, 1e-4));
    double leaf_w = 0.0, wmin = 1e300, wmax = -1e300;
    for (int e = 0; e < t.m(); ++e) {
      if (is_leaf_edge(t, e)) leaf_w = std::max(leaf_w, w[e]);
      wmin = std::min(wmin, w[e]);
      wmax = std::max(wmax, w[e]);
    }
    rows.push_back(value_row(tag, "leaf-edge weight", leaf_w, c.leaf_exp, 5e-4));
    if (c.max_exp > 0)
      rows.push_back(value_row(tag, "maximum weight (edge at a center)", wmax, c.max_exp, 5e-4));
    rows.push_back(value_row(tag, "minimum weight (central path edge)", wmin, c.min_exp, 5e-4));
    StructureReport ext = locate_extremal_edges(t, w, p.lambda_max);
    bool min_internal = true;
    for (int e : ext.min_edges)
      if (is_leaf_edge(t, e)) min_internal = false;
    rows.push_back(pred_row(tag, "global minimum on an internal edge, below the leaf weight",
                            leaf_w - wmin, min_internal && leaf_w > wmin + 1e-6));
  }
  return rows;
}

// ---- caterpillar_figure -----------------------------------------------------

std::vector<ExperimentRow> run_caterpillar_figure() {
  std::vector<ExperimentRow> rows;
  Tree t = make_tree(8, {{3, 4}, {1, 3}, {4, 5}, {4, 7}, {1, 0}, {1, 2}, {5, 6}});
  PerronResult p = perron_eigenpair(t);
  rows.push_back(value_row("8-vertex caterpillar", "kappa = -lambda_max", -p.lambda_max, 0.0168,
                           5e-4));
  rows.push_back(value_row("8-vertex caterpillar", "kappa, 12-digit pin", -p.lambda_max,
                           0.016484694949099, 1e-9));
  std::vector<double> sorted_w = p.w_maxnorm;
  std::sort(sorted_w.begin(), sorted_w.end(), std::greater<double>());
  const double expected[] = {1.00, 0.85, 0.74, 0.44, 0.29, 0.29, 0.25};
  for (int i = 0; i < 7; ++i)
    rows.push_back(value_row("sorted weight " + std::to_string(i + 1), "max-normalized value",
                             sorted_w[i], expected[i], 0.01));
  StructureReport rad = check_radial_monotonicity(t, p.w_maxnorm, p.lambda_max);
  rows.push_back(pred_row("argmax", "unique maximal edge, the central internal edge {3,4}",
                          (double)rad.max_edges.size(),
                          rad.max_edges.size() == 1 && rad.max_edges[0] == 0));
  rows.push_back(pred_row("all paths from the maximum", "weights strictly decrease outward",
                          p.lambda_max, rad.radial_monotone));
  return rows;
}

// ---- cospectral_pair --------------------------------------------------------

std::vector<ExperimentRow> run_cospectral_pair() {
  std::vector<ExperimentRow> rows;
  auto [t1, t2] = cospectral_pair_trees();
  RicciMatrix r1 = build_ricci_matrix(t1), r2 = build_ricci_matrix(t2);
  SpectrumFingerprint f1 = full_spectrum(r1), f2 = full_spectrum(r2);

  double spec_diff = 0.0;
  for (size_t i = 0; i < f1.eigenvalues.size(); ++i)
    spec_diff = std::max(spec_diff, std::fabs(f1.eigenvalues[i] - f2.eigenvalues[i]));
  bool exact_equal = f1.charpoly == f2.charpoly;
  rows.push_back(pred_row("T1 vs T2", "identical charpoly in exact arithmetic (float gap shown)",
                          spec_diff, exact_equal && spec_diff < 1e-8));

  std::string c1 = canonical_code(t1), c2 = canonical_code(t2);
  rows.push_back(pred_row("T1 vs T2", "not isomorphic: canonical codes differ",
                          c1 == c2 ? 0.0 : 1.0, c1 != c2));

  PerronResult p1 = perron_eigenpair(t1), p2 = perron_eigenpair(t2);
  rows.push_back(value_row("T1", "lambda_max", p1.lambda_max, 0.2403419864911057, 1e-9));
  rows.push_back(value_row("T2", "same lambda_max", p2.lambda_max, 0.2403419864911057, 1e-9));

  std::vector<double> w1 = p1.w_maxnorm, w2 = p2.w_maxnorm;
  std::sort(w1.begin(), w1.end());
  std::sort(w2.begin(), w2.end());
  double wgap = 0.0;
  for (size_t i = 0; i < w1.size(); ++i) wgap = std::max(wgap, std::fabs(w1[i] - w2[i]));
  rows.push_back(pred_row("T1 vs T2", "Perron weight multisets differ (max sorted gap)", wgap,
                          wgap > 1e-3));
  return rows;
}

// ---- appendix_counterexamples ----------------------------------------------

std::vector<ExperimentRow> run_appendix_counterexamples() {
  std::vector<ExperimentRow> rows;
  Tree base1 = make_tree(
      10, {{1, 5}, {0, 6}, {0, 4}, {3, 4}, {3, 7}, {2, 3}, {1, 2}, {1, 8}, {8, 9}});
  auto add_case = [&rows](const std::string& tag, const AttachmentDelta& d, double b, double a,
                          double delta, double delta_tol) {
    rows.push_back(value_row(tag, "lambda before", d.lambda_before, b, 1e-7));
    rows.push_back(value_row(tag, "lambda after", d.lambda_after, a, 1e-7));
    rows.push_back(value_row(tag, "delta (a decrease)", d.delta, delta, delta_tol));
  };
  add_case("subdivide edge (2,3)", attachment_delta_subdivide(base1, 2, 3), 0.0474186669,
           0.0382151329, -0.0092035340, 1e-7);
  add_case("subdivide edge (1,2)", attachment_delta_subdivide(base1, 1, 2), 0.0474186669,
           0.0382151329, -0.0092035340, 1e-7);

  Tree base2 = make_tree(12, {{0, 4},
                              {2, 6},
                              {4, 5},
                              {5, 6},
                              {3, 7},
                              {3, 5},
                              {8, 9},
                              {5, 8},
                              {1, 5},
                              {1, 11},
                              {10, 11}});
  add_case("leaf at vertex 5 (degree 6)", attachment_delta_leaf(base2, 5), 0.25953147,
           0.25738978, -2.14e-3, 5e-6);

  Tree base3 = make_tree(12, {{0, 11},
                              {1, 11},
                              {2, 3},
                              {3, 10},
                              {4, 8},
                              {5, 6},
                              {6, 11},
                              {7, 9},
                              {8, 11},
                              {9, 11},
                              {10, 11}});
  add_case("leaf at vertex 11 (degree 8)", attachment_delta_leaf(base3, 11), 0.19229065,
           0.19191000, -3.81e-4, 5e-7);
  return rows;
}

// ---- tdl_limit --------------------------------------------------------------

std::vector<ExperimentRow> run_tdl_limit() {
  std::vector<ExperimentRow> rows;
  struct Case {
    int d;
    double limit, r1, r2;
  };
  const Case cases[] = {
      {3, 0.609475708248730, 3.552382866, 3.745288260},
      {4, 0.866025403784439, 3.694679386, 3.836169822},
      {5, 1.000000000000000, 3.755404785, 3.871569927},
      {19, 1.236067440749398, 3.898478150, 3.949501493},
  };
  for (const Case& c : cases) {
    std::string d = "d=" + std::to_string(c.d);
    rows.push_back(value_row(d, "limit 1 - 4/d + 2*sqrt(d-1)/d", regular_ball_limit(c.d),
                             c.limit, 1e-12));
    double g20 = c.limit - tridiagonal_lambda(c.d, 20);
    double g40 = c.limit - tridiagonal_lambda(c.d, 40);
    double g80 = c.limit - tridiagonal_lambda(c.d, 80);
    rows.push_back(pred_row(d + " L=20,40,80", "gap to the limit strictly decreasing", g80,
                            g20 > g40 && g40 > g80 && g80 > 0));
    rows.push_back(value_row(d, "gap ratio L=20/40", g20 / g40, c.r1, 1e-6));
    rows.push_back(value_row(d, "gap ratio L=40/80", g40 / g80, c.r2, 1e-6));
  }
  for (auto [d, L] : {std::pair{3, 3}, {3, 4}, {4, 3}}) {
    double tri = tridiagonal_lambda(d, L);
    double full = perron_eigenpair(regular_ball(d, L)).lambda_max;
    rows.push_back(value_row("d=" + std::to_string(d) + " L=" + std::to_string(L),
                             "tridiagonal reduction matches the full matrix", tri - full, 0.0,
                             1e-10));
  }
  rows.push_back(value_row("d=19 L=60", "deep-ball value, 13-digit pin", tridiagonal_lambda(19, 60),
                           1.235465447935598, 1e-9));
  return rows;
}

// ---- scans ------------------------------------------------------------------

long count_violations(const std::vector<TreeScanRecord>& recs, const std::string& prefix) {
  long c = 0;
  for (const TreeScanRecord& r : recs)
    for (const std::string& v : r.violations)
      if (v.compare(0, prefix.size(), prefix) == 0) ++c;
  return c;
}

std::vector<ExperimentRow> run_bounds_scan() {
  std::vector<ExperimentRow> rows;
  std::vector<TreeScanRecord> recs = scan_trees(2, 12, true);
  rows.push_back(value_row("n=2..12", "free trees scanned", (double)recs.size(), 986.0, 0.0));
  rows.push_back(value_row("n=2..12", "upper-bound violations (max over edges of -v)",
                           (double)count_violations(recs, "bounds-upper"), 0.0, 0.0));
  rows.push_back(value_row("n=2..12", "lower-bound violations (min internal -vtilde)",
                           (double)count_violations(recs, "bounds-lower"), 0.0, 0.0));
  return rows;
}

std::vector<ExperimentRow> run_caterpillar_scan() {
  std::vector<ExperimentRow> rows;
  std::vector<TreeScanRecord> recs = scan_trees(2, 12, true);
  rows.push_back(value_row("n=2..12", "free trees scanned", (double)recs.size(), 986.0, 0.0));
  rows.push_back(value_row("n=2..12", "trees with lambda < -1e-10 that are not caterpillars",
                           (double)count_violations(recs, "caterpillar"), 0.0, 0.0));
  rows.push_back(value_row("n=2..12", "Einstein-property violations (curvature spread)",
                           (double)count_violations(recs, "einstein"), 0.0, 0.0));
  long structural = count_violations(recs, "max-") + count_violations(recs, "min-") +
                    count_violations(recs, "chain") + count_violations(recs, "leaf-local");
  rows.push_back(value_row("n=2..12", "extremal/monotonicity violations", (double)structural, 0.0,
                           0.0));
  return rows;
}

}  // namespace

bool ExperimentReport::all_pass() const {
  for (const ExperimentRow& r : rows)
    if (!r.pass) return false;
  return true;
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {
      "double_star_signs", "d33_subdivision", "tmk_table",
      "path_star_zeros",   "central_branch_table", "d44_k29",
      "caterpillar_figure", "cospectral_pair", "appendix_counterexamples",
      "tdl_limit",         "bounds_scan",     "caterpillar_scan",
  };
  return ids;
}

ExperimentReport reproduce(const std::string& id) {
  using Runner = std::vector<ExperimentRow> (*)();
  struct Entry {
    const char* id;
    Runner run;
  };
  static const Entry table[] = {
      {"double_star_signs", run_double_star_signs},
      {"d33_subdivision", run_d33_subdivision},
      {"tmk_table", run_tmk_table},
      {"path_star_zeros", run_path_star_zeros},
      {"central_branch_table", run_central_branch_table},
      {"d44_k29", run_d44_k29},
      {"caterpillar_figure", run_caterpillar_figure},
      {"cospectral_pair", run_cospectral_pair},
      {"appendix_counterexamples", run_appendix_counterexamples},
      {"tdl_limit", run_tdl_limit},
      {"bounds_scan", run_bounds_scan},
      {"caterpillar_scan", run_caterpillar_scan},
  };
  for (const Entry& e : table) {
    if (id == e.id) {
      auto t0 = std::chrono::steady_clock::now();
      ExperimentReport rep;
      rep.id = id;
      rep.rows = e.run();
      rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      return rep;
    }
  }
  fail(ErrorKind::UnknownExperiment, "no experiment named '" + id + "'");
}

std::pair<Tree, Tree> cospectral_pair_trees() {
  Tree t1 = make_tree(17, {{1, 0},
                           {1, 2},
                           {1, 6},
                           {1, 8},
                           {0, 9},
                           {0, 15},
                           {0, 16},
                           {2, 3},
                           {3, 4},
                           {4, 5},
                           {6, 7},
                           {9, 10},
                           {10, 11},
                           {10, 13},
                           {10, 14},
                           {11, 12}});
  Tree t2 = make_tree(17, {{1, 0},
                           {1, 2},
                           {1, 6},
                           {1, 7},
                           {0, 8},
                           {2, 3},
                           {3, 4},
                           {4, 5},
                           {8, 9},
                           {8, 14},
                           {8, 16},
                           {9, 10},
                           {9, 12},
                           {9, 13},
                           {10, 11},
                           {14, 15}});
  return {t1, t2};
}

std::vector<CospectralClass> cospectral_search(int max_n, bool parallel) {
  if (max_n > 17) fail(ErrorKind::OutOfRange, "cospectral search is sized for n <= 17");
  std::vector<CospectralClass> out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::vector<std::pair<int, int>>> batch;
    for_each_free_tree_edges(n, [&](const std::vector<std::pair<int, int>>& e) {
      batch.push_back(e);
    });
    const long count = (long)batch.size();
    std::vector<std::vector<double>> spectra(count);
    std::vector<std::string> codes(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < count; ++i) {
      Tree t = make_tree(n, batch[i]);
      spectra[i] = jacobi_eigensystem(ricci_matrix_double(t), false).values;
      codes[i] = canonical_code(t);
    }
    (void)parallel;

    std::vector<long> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](long a, long b) { return spectra[a] < spectra[b]; });

    auto close = [&](long a, long b) {
      for (size_t k = 0; k < spectra[a].size(); ++k)
        if (std::fabs(spectra[a][k] - spectra[b][k]) >= 1e-8) return false;
      return true;
    };

    long i = 0;
    while (i < count) {
      long j = i + 1;
      while (j < count && close(idx[j - 1], idx[j])) ++j;
      if (j - i >= 2) {
        // candidate bucket: confirm with exact characteristic polynomials
        std::vector<std::vector<Rat>> polys;
        for (long k = i; k < j; ++k)
          polys.push_back(charpoly(build_ricci_matrix(make_tree(n, batch[idx[k]])).m));
        std::vector<int> grouped(j - i, 0);
        for (long a = 0; a < j - i; ++a) {
          if (grouped[a]) continue;
          CospectralClass cls;
          cls.n = n;
          cls.members.push_back(codes[idx[i + a]]);
          for (long b = a + 1; b < j - i; ++b) {
            if (!grouped[b] && polys[a] == polys[b]) {
              grouped[b] = 1;
              cls.members.push_back(codes[idx[i + b]]);
            }
          }
          grouped[a] = 1;
          if (cls.members.size() >= 2) {
            std::sort(cls.members.begin(), cls.members.end());
            cls.fingerprint.eigenvalues = spectra[idx[i + a]];
            cls.fingerprint.charpoly = polys[a];
            out.push_back(std::move(cls));
          } else {
            std::cerr << "cospectral_search: float tie at n=" << n
                      << " not confirmed exactly: " << codes[idx[i + a]] << "\n";
          }
        }
      }
      i = j;
    }
  }
  return out;
}

Json to_json(const ExperimentReport& rep) {
  Json rows = Json::array();
  for (const ExperimentRow& r : rep.rows) {
    Json row = Json::object();
    row.add("params", Json::str(r.params));
    row.add("claim", Json::str(r.claim));
    row.add("computed", Json::num(r.computed));
    if (r.expected) {
      row.add("expected", Json::num(*r.expected));
      row.add("tol", Json::num(r.tol));
    }
    row.add("pass", Json::boolean(r.pass));
    rows.push(std::move(row));
  }
  Json j = Json::object();
  j.add("id", Json::str(rep.id));
  j.add("rows", std::move(rows));
  j.add("all_pass", Json::boolean(rep.all_pass()));
  return j;
}

std::string to_table(const ExperimentReport& rep) {
  size_t wp = 6, wc = 5;
  for (const ExperimentRow& r : rep.rows) {
    wp = std::max(wp, r.params.size());
    wc = std::max(wc, r.claim.size());
  }
  std::ostringstream os;
  os << "experiment: " << rep.id << "\n";
  auto pad = [&os](const std::string& s, size_t w) {
    os << s;
    size_t n = s.size() < w ? w - s.size() : 2;  // never glue columns together
    for (size_t i = 0; i < n; ++i) os << ' ';
  };
  pad("params", wp + 2);
  pad("claim", wc + 2);
  os << "computed           expected           tol        pass\n";
  for (const ExperimentRow& r : rep.rows) {
    pad(r.params, wp + 2);
    pad(r.claim, wc + 2);
    pad(json_double(r.computed), 17);
    pad(r.expected ? json_double(*r.expected) : "-", 17);
    pad(r.expected ? json_double(r.tol) : "-", 9);
    os << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  os << (rep.all_pass() ? "all rows pass" : "FAILURES PRESENT") << "  (runtime " << rep.runtime_ms
     << " ms)\n";
  return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const ExperimentReport& rep) {
  std::string out = "params,claim,computed,expected,tol,pass\n";
  for (const ExperimentRow& r : rep.rows) {
    out += csv_field(r.params) + "," + csv_field(r.claim) + "," + json_double(r.computed) + ",";
    out += (r.expected ? json_double(*r.expected) : "") + ",";
    out += (r.expected ? json_double(r.tol) : "") + ",";
    out += r.pass ? "1" : "0";
    out += '\n';
  }
  return out;
}

Json to_json(const std::vector<CospectralClass>& classes) {
  Json arr = Json::array();
  for (const CospectralClass& c : classes) {
    Json members = Json::array();
    for (const std::string& m : c.members) members.push(Json::str(m));
    Json eig = Json::array();
    for (double v : c.fingerprint.eigenvalues) eig.push(Json::num(v));
    Json poly = Json::array();
    for (const Rat& r : c.fingerprint.charpoly) poly.push(Json::str(to_string(r)));
    Json cls = Json::object();
    cls.add("n", Json::integer(c.n));
    cls.add("members", std::move(members));
    cls.add("eigenvalues", std::move(eig));
    cls.add("charpoly", std::move(poly));
    arr.push(std::move(cls));
  }
  Json j = Json::object();
  j.add("classes", std::move(arr));
  j.add("count", Json::integer((long)classes.size()));
  return j;
}

}  // namespace riccitree
