#include "riccitree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riccitree/error.hpp"

namespace riccitree {

namespace {

// y = (R + alpha I) x
void shifted_matvec(const std::vector<std::vector<double>>& r, double alpha,
                    const std::vector<double>& x, std::vector<double>& y) {
  const int m = (int)r.size();
  for (int i = 0; i < m; ++i) {
    double acc = alpha * x[i];
    const std::vector<double>& row = r[i];
    for (int j = 0; j < m; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

PerronResult perron_core(const std::vector<std::vector<double>>& r, double alpha, double tol) {
  const int m = (int)r.size();
  PerronResult out;
  if (m == 1) {
    // K2: the 1x1 matrix is its own spectrum, and there is no second
    // eigenvalue to measure a gap against.
    out.lambda_max = r[0][0];
    out.w_l2 = {1.0};
    out.w_maxnorm = {1.0};
    out.residual = 0.0;
    out.gap = std::nullopt;
    out.iterations = 0;
    return out;
  }

  const long max_iters = 1000000;
  std::vector<double> w(m, 1.0 / std::sqrt((double)m)), y(m), z(m);
  shifted_matvec(r, alpha, w, y);
  double lambda = 0.0, prev = 1e300, residual = 1e300;
  bool converged = false;
  long it = 0;
  for (; it < max_iters; ++it) {
    double ny = norm2(y);
    for (int i = 0; i < m; ++i) w[i] = y[i] / ny;
    // Rayleigh quotient of R at the new unit iterate, and the residual of
    // the pair (lambda, w) in the infinity norm; z doubles as next step's
    // unnormalized iterate.
    shifted_matvec(r, alpha, w, z);
    double ray = std::inner_product(w.begin(), w.end(), z.begin(), 0.0) - alpha;
    double winf = 0.0, rinf = 0.0;
    for (int i = 0; i < m; ++i) {
      winf = std::max(winf, std::fabs(w[i]));
      rinf = std::max(rinf, std::fabs(z[i] - (ray + alpha) * w[i]));
    }
    residual = rinf / winf;
    lambda = ray;
    if (std::fabs(ray - prev) < tol && residual <= tol) {
      converged = true;
      ++it;
      break;
    }
    prev = ray;
    y.swap(z);
  }

  JacobiResult dense;  // reused for the gap; filled with vectors only on fallback
  if (!converged) {
    // Power iteration can crawl when the gap is tiny; the dense solve is
    // exact enough at these sizes and always terminates.
    dense = jacobi_eigensystem(r, true);
    lambda = dense.values[m - 1];
    w = dense.vectors[m - 1];
    // Perron vector is signed arbitrarily by the solver; make it positive.
    int arg = 0;
    for (int i = 1; i < m; ++i)
      if (std::fabs(w[i]) > std::fabs(w[arg])) arg = i;
    if (w[arg] < 0)
      for (double& v : w) v = -v;
    double winf = 0.0, rinf = 0.0;
    std::vector<double> z(m);
    shifted_matvec(r, alpha, w, z);
    for (int i = 0; i < m; ++i) {
      winf = std::max(winf, std::fabs(w[i]));
      rinf = std::max(rinf, std::fabs(z[i] - (lambda + alpha) * w[i]));
    }
    residual = rinf / winf;
  } else {
    dense = jacobi_eigensystem(r, false);
  }

  out.lambda_max = lambda;
  out.residual = residual;
  out.iterations = (int)std::min(it, max_iters);
  out.gap = lambda - dense.values[m - 2];
  double nw = norm2(w), mx = 0.0;
  for (double v : w) mx = std::max(mx, v);
  out.w_l2.resize(m);
  out.w_maxnorm.resize(m);
  for (int i = 0; i < m; ++i) {
    out.w_l2[i] = w[i] / nw;
    out.w_maxnorm[i] = w[i] / mx;
  }
  return out;
}

}  // namespace

PerronResult perron_eigenpair(const RicciMatrix& m, double tol) {
  return perron_core(to_double(m), to_double(m.shift_alpha), tol);
}

PerronResult perron_eigenpair(const Tree& t, double tol) {
  return perron_core(ricci_matrix_double(t), shift_alpha_double(t), tol);
}

JacobiResult jacobi_eigensystem(std::vector<std::vector<double>> a, bool want_vectors) {
  const int n = (int)a.size();
  JacobiResult out;
  std::vector<std::vector<double>> v;
  if (want_vectors) {
    v.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;
  }
  if (n == 1) {
    out.values = {a[0][0]};
    if (want_vectors) out.vectors = {{1.0}};
    return out;
  }

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * a[p][q] * a[p][q];
    if (std::sqrt(off) < 1e-12) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e7) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = a[p][i] = c * aip - s * aiq;
          a[i][q] = a[q][i] = s * aip + c * aiq;
        }
        if (want_vectors) {
          for (int i = 0; i < n; ++i) {
            double vip = v[i][p], viq = v[i][q];
            v[i][p] = c * vip - s * viq;
            v[i][q] = s * vip + c * viq;
          }
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });
  out.values.resize(n);
  for (int k = 0; k < n; ++k) out.values[k] = a[idx[k]][idx[k]];
  if (want_vectors) {
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) out.vectors[k][i] = v[i][idx[k]];
  }
  return out;
}

SpectrumFingerprint full_spectrum(const RicciMatrix& m) {
  SpectrumFingerprint out;
  out.eigenvalues = jacobi_eigensystem(to_double(m), false).values;
  out.charpoly = charpoly(m.m);
  return out;
}

namespace {

// Number of eigenvalues of the d-regular-ball tridiagonal below x, by the
// LDL^T negative-pivot count.
int sturm_count(double d0, double dm, double dl, double b2, int L, double x) {
  int cnt = 0;
  double q = d0 - x;
  if (q < 0) ++cnt;
  for (int i = 1; i < L; ++i) {
    double di = (i == L - 1) ? dl : dm;
    if (q == 0.0) q = 1e-300;
    q = di - x - b2 / q;
    if (q < 0) ++cnt;
  }
  return cnt;
}

}  // namespace

double tridiagonal_lambda(int d, int L) {
  if (d < 3 || L < 2) fail(ErrorKind::InvalidParams, "tridiagonal_lambda requires d >= 3, L >= 2");
  double d0 = 3.0 / d - 1.0;
  double dm = 4.0 / d - 1.0;
  double dl = 3.0 / d;
  double b2 = (double)(d - 1) / ((double)d * d);
  // Bisect for the smallest eigenvalue; Gershgorin keeps everything in
  // [-3, 3] comfortably.
  double lo = -3.0, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (sturm_count(d0, dm, dl, b2, L, mid) >= 1)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-15) break;
  }
  return -0.5 * (lo + hi);
}

FlowResult normalized_flow(const Tree& t, std::vector<double> w0, double step, double tol) {
  const int m = t.m();
  if ((int)w0.size() != m)
    fail(ErrorKind::InvalidParams, "flow needs one starting weight per edge");
  for (double v : w0)
    if (!(v > 0.0)) fail(ErrorKind::NonpositiveWeight, "flow starting weights must be positive");
  double alpha = shift_alpha_double(t);
  if (!(step > 0.0) || step >= 1.0 / (2.0 + alpha))
    fail(ErrorKind::StepTooLarge, "Euler step must lie in (0, 1/(2+alpha))");

  std::vector<std::vector<double>> r = ricci_matrix_double(t);
  double n0 = norm2(w0);
  for (double& v : w0) v /= n0;

  const long max_steps = 1000000;
  std::vector<double> y(m), next(m);
  FlowResult out;
  long it = 0;
  for (; it < max_steps; ++it) {
    shifted_matvec(r, 0.0, w0, y);
    for (int i = 0; i < m; ++i) next[i] = w0[i] + step * y[i];
    for (double v : next)
      if (!(v > 0.0))
        fail(ErrorKind::StepTooLarge, "flow left the positive cone; use a smaller step");
    double nn = norm2(next);
    double moved = 0.0;
    for (int i = 0; i < m; ++i) {
      next[i] /= nn;
      moved = std::max(moved, std::fabs(next[i] - w0[i]));
    }
    w0.swap(next);
    if (moved < tol) {
      ++it;
      break;
    }
  }
  if (it >= max_steps)
    fail(ErrorKind::NoConvergence, "normalized flow did not settle within the step limit");
  shifted_matvec(r, 0.0, w0, y);
  out.lambda_est = std::inner_product(w0.begin(), w0.end(), y.begin(), 0.0);
  out.w_limit = std::move(w0);
  out.steps = (int)it;
  return out;
}

}  // namespace riccitree
