#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "riccitree/enumerate.hpp"
#include "riccitree/error.hpp"
#include "riccitree/rational.hpp"
#include "riccitree/ricci.hpp"
#include "riccitree/spectral.hpp"
#include "riccitree/tree.hpp"

using namespace riccitree;

TEST_CASE("closed forms: 5-path and stars") {
  PerronResult p = perron_eigenpair(path(5));
  CHECK(p.lambda_max == doctest::Approx(-1.0 + std::sqrt(2.0) / 2.0).epsilon(1e-12));
  // max-normalized weights: sqrt(2)-1 on the end edges, 1 in the middle
  CHECK(p.w_maxnorm[0] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-10));
  CHECK(p.w_maxnorm[1] == doctest::Approx(1.0));
  CHECK(p.w_maxnorm[3] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-10));

  for (int m = 1; m <= 20; ++m) {
    PerronResult s = perron_eigenpair(star(m));
    CHECK(s.lambda_max == doctest::Approx(-2.0 / m).epsilon(1e-12));
    for (double w : s.w_maxnorm) CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("single edge is handled without iteration") {
  PerronResult p = perron_eigenpair(path(2));
  CHECK(p.lambda_max == -2.0);
  CHECK(p.w_maxnorm == std::vector<double>{1.0});
  CHECK(p.residual == 0.0);
  CHECK(!p.gap.has_value());
}

TEST_CASE("perron vector: positive, normalized, small residual, simple top") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Tree t = random_tree(3 + trial % 9, rng);
    PerronResult p = perron_eigenpair(t);
    double l2 = 0, mx = 0;
    for (double w : p.w_l2) {
      CHECK(w > 0.0);
      l2 += w * w;
    }
    for (double w : p.w_maxnorm) mx = std::max(mx, w);
    CHECK(std::sqrt(l2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mx == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.residual <= 1e-10);
    if (t.m() > 1) {
      REQUIRE(p.gap.has_value());
      CHECK(*p.gap > 0.0);  // Perron value is simple
    }
  }
}

TEST_CASE("eigenvalue sum equals the trace, non-perron vectors change sign") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    Tree t = random_tree(4 + trial % 5, rng);
    auto rd = ricci_matrix_double(t);
    JacobiResult jr = jacobi_eigensystem(rd, true);
    double trace = 0, sum = 0;
    for (int e = 0; e < t.m(); ++e) trace += rd[e][e];
    for (double v : jr.values) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
    // every eigenvector except the top one has entries of both signs
    for (size_t k = 0; k + 1 < jr.values.size(); ++k) {
      double lo = *std::min_element(jr.vectors[k].begin(), jr.vectors[k].end());
      double hi = *std::max_element(jr.vectors[k].begin(), jr.vectors[k].end());
      CHECK(lo < -1e-8);
      CHECK(hi > 1e-8);
    }
  }
}

TEST_CASE("jacobi eigenvalues are roots of the exact charpoly") {
  for (const Tree& t : {s32(), double_star(2, 3), tmk(2, 2), path(8)}) {
    RicciMatrix rm = build_ricci_matrix(t);
    std::vector<Rat> cp = charpoly(rm.m);
    JacobiResult jr = jacobi_eigensystem(to_double(rm), false);
    for (double x : jr.values) CHECK(std::abs(eval_charpoly(cp, x)) < 1e-8);
  }
}

TEST_CASE("full_spectrum is sorted and consistent with perron") {
  SpectrumFingerprint f = full_spectrum(build_ricci_matrix(tmk(3, 1)));
  CHECK(std::is_sorted(f.eigenvalues.begin(), f.eigenvalues.end()));
  PerronResult p = perron_eigenpair(tmk(3, 1));
  CHECK(f.eigenvalues.back() == doctest::Approx(p.lambda_max).epsilon(1e-10));
  CHECK(f.charpoly.size() == f.eigenvalues.size());
}

TEST_CASE("empirical floor: lambda_max >= -2, minimum is the single star") {
  // Over all free trees at each n, the most negative lambda_max is the
  // star's -2/(n-1); everything sits strictly above -1 once n >= 4.
  for (int n = 2; n <= 9; ++n) {
    double best = 0;
    for_each_free_tree(n, [&](const Tree& t) {
      double l = perron_eigenpair(t).lambda_max;
      CHECK(l >= -2.0);
      best = std::min(best, l);
      if (n >= 4 && !is_star(t)) CHECK(l > -1.0);
    });
    CHECK(best == doctest::Approx(-2.0 / (n - 1)).epsilon(1e-10));
  }
}

TEST_CASE("tridiagonal reduction equals the full-ball computation") {
  for (auto [d, L] : {std::pair{3, 3}, {3, 4}, {4, 3}, {5, 2}}) {
    double tri = tridiagonal_lambda(d, L);
    double full = perron_eigenpair(regular_ball(d, L)).lambda_max;
    CHECK(std::abs(tri - full) < 1e-10);
  }
  CHECK_THROWS_AS(tridiagonal_lambda(2, 5), Error);
  CHECK_THROWS_AS(tridiagonal_lambda(3, 1), Error);
}

TEST_CASE("ball eigenvalue increases with radius toward the closed-form limit") {
  for (int d : {3, 4, 5}) {
    double limit = 1.0 - 4.0 / d + 2.0 * std::sqrt(d - 1.0) / d;
    double prev = -10;
    for (int L = 2; L <= 30; ++L) {
      double lam = tridiagonal_lambda(d, L);
      CHECK(lam > prev);
      CHECK(lam < limit);
      prev = lam;
    }
    CHECK(limit - tridiagonal_lambda(d, 200) < 1e-3);
  }
}

TEST_CASE("flow: fixed points and convergence to the perron direction") {
  // S_3^2 with its kernel weights is already stationary
  FlowResult fixed = normalized_flow(s32(), {3, 3, 3, 1, 1, 1});
  CHECK(fixed.lambda_est == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(fixed.steps <= 2);

  // star(4) from its symmetric start converges immediately to -1/2
  FlowResult st = normalized_flow(star(4), std::vector<double>(4, 1.0));
  CHECK(st.lambda_est == doctest::Approx(-0.5).epsilon(1e-10));

  std::mt19937 rng(31);
  std::uniform_real_distribution<double> U(0.2, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    Tree t = random_tree(4 + trial % 6, rng);
    std::vector<double> w0(t.m());
    for (double& x : w0) x = U(rng);
    FlowResult f = normalized_flow(t, w0);
    PerronResult p = perron_eigenpair(t);
    CHECK(f.lambda_est == doctest::Approx(p.lambda_max).epsilon(1e-9));
    for (int e = 0; e < t.m(); ++e)
      CHECK(f.w_limit[e] == doctest::Approx(p.w_l2[e]).epsilon(1e-7));
  }
}

TEST_CASE("flow input validation") {
  CHECK_THROWS_AS(normalized_flow(path(4), {1.0, 1.0}), Error);            // wrong size
  CHECK_THROWS_AS(normalized_flow(path(4), {1.0, -1.0, 1.0}), Error);      // nonpositive
  // step must stay below 1/(2+alpha); alpha <= 2 so 0.3 is always too big
  CHECK_THROWS_AS(normalized_flow(path(4), {1.0, 1.0, 1.0}, 0.3), Error);
  CHECK_THROWS_AS(normalized_flow(path(4), {1.0, 1.0, 1.0}, 0.0), Error);
  try {
    normalized_flow(path(4), {1.0, 1.0, 1.0}, 0.29);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StepTooLarge);  // 1/(2+3/2) = 2/7 < 0.29
  }
}
