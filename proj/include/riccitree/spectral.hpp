#pragma once

#include <optional>
#include <vector>

#include "riccitree/ricci.hpp"
#include "riccitree/tree.hpp"

namespace riccitree {

struct PerronResult {
  double lambda_max = 0.0;
  std::vector<double> w_l2;       // unit 2-norm, entrywise positive
  std::vector<double> w_maxnorm;  // max entry = 1
  double residual = 0.0;          // ||R w - lambda w||_inf / ||w||_inf
  std::optional<double> gap;      // lambda_max - lambda_2 (absent for 1x1)
  int iterations = 0;
};

// Power iteration on R + alpha*I (alpha = the matrix's shift) started from
// the all-ones vector; converged when successive Rayleigh quotients differ by
// < tol and the residual is < tol.  Falls back to the dense solver if power
// iteration stalls (pathologically small gap).  The spectral gap is taken
// from the dense spectrum.
PerronResult perron_eigenpair(const RicciMatrix& m, double tol = 1e-12);
PerronResult perron_eigenpair(const Tree& t, double tol = 1e-12);

// Dense symmetric eigensolve by cyclic Jacobi rotations.  values ascending;
// vectors[k] is the eigenvector of values[k] (unit 2-norm).
struct JacobiResult {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

JacobiResult jacobi_eigensystem(std::vector<std::vector<double>> a, bool want_vectors);

// Eigenvalues plus the exact characteristic polynomial of det(xI - R_T),
// monic coefficients (c1..cm) in rational arithmetic.
struct SpectrumFingerprint {
  std::vector<double> eigenvalues;  // ascending
  std::vector<Rat> charpoly;
};

SpectrumFingerprint full_spectrum(const RicciMatrix& m);

// Largest Ricci eigenvalue of the depth-L ball in the d-regular tree via the
// L x L tridiagonal reduction: diagonal (3/d-1, 4/d-1, ..., 4/d-1, 3/d),
// off-diagonal -sqrt(d-1)/d; the answer is -lambda_min, found by bisection
// on the Sturm sign-count.  Requires d >= 3, L >= 2.
double tridiagonal_lambda(int d, int L);

// Explicit Euler on dw/dt = R_T w with renormalization to unit 2-norm each
// step; stops when the direction moves < tol per step.  The step must stay
// below 1/(2 + alpha) or positivity can be lost (StepTooLarge).
struct FlowResult {
  std::vector<double> w_limit;  // unit 2-norm
  double lambda_est = 0.0;      // Rayleigh quotient at the limit
  int steps = 0;
};

FlowResult normalized_flow(const Tree& t, std::vector<double> w0, double step = 0.05,
                           double tol = 1e-12);

}  // namespace riccitree
