#pragma once

#include <map>
#include <optional>
#include <vector>

#include "riccitree/rational.hpp"
#include "riccitree/tree.hpp"

namespace riccitree {

// Edge-indexed |E|x|E| matrix: diagonal -(1/d_x + 1/d_y) for e = {x,y},
// off-diagonal 1/d_x when e and e' meet exactly at x, zero when disjoint.
// Entries are exact rationals; eigensolvers convert to double on entry.
struct RicciMatrix {
  Tree tree;
  RatMatrix m;
  Rat shift_alpha;  // max over edges of 1/d_x + 1/d_y; m + alpha*I is nonnegative
};

RicciMatrix build_ricci_matrix(const Tree& t);

// Same entries in double precision, skipping the rational intermediate --
// used by the bulk scans where millions of entries get built.
std::vector<std::vector<double>> ricci_matrix_double(const Tree& t);
std::vector<std::vector<double>> to_double(const RicciMatrix& rm);
double shift_alpha_double(const Tree& t);

// R_T = delta - diag(v) on the line graph: delta has diagonal
// 1/d_x + 1/d_y - 2 and the same off-diagonal as R_T; the potential is
// v[e] = 2/d_x + 2/d_y - 2.  vtilde refines v on internal edges only:
// vtilde[e] = (2 + d_x0)/d_x + (2 + d_y0)/d_y - 2 with d_x0 = number of leaf
// edges at x.  Stars have no internal edges, so vtilde is empty (not an error).
struct SchrodingerParts {
  RatMatrix delta;
  std::vector<Rat> v;
  std::map<int, Rat> vtilde;  // edge id -> value, internal edges only
};

SchrodingerParts schrodinger_decomposition(const Tree& t);

// Per-edge curvature of a positive weighting w: for e = {x,y},
//   kappa_e = -((S_x - 2 w_e)/(w_e d_x) + (S_y - 2 w_e)/(w_e d_y)),
// where S_v is the weighted degree sum at v.
struct CurvatureAssignment {
  std::vector<double> kappa;    // per edge
  std::vector<double> weights;  // the inputs, echoed
  std::vector<double> s;        // per vertex
};

CurvatureAssignment lly_curvature(const Tree& t, const std::vector<double>& w);

// Common curvature value if kappa is constant across edges within tol
// (absolute, measured against tol * max(1, max|kappa|)), otherwise empty.
std::optional<double> is_einstein(const Tree& t, const std::vector<double>& w,
                                  double tol = 1e-9);

// Exact check that the integer edge weighting is a zero-eigenvalue
// eigenvector: R_T w == 0 in rational arithmetic.  The candidate must be a
// full-length, strictly positive weighting; anything else is an error, not
// a "no".
bool kernel_vector_exact(const Tree& t, const std::vector<long>& w);

}  // namespace riccitree
