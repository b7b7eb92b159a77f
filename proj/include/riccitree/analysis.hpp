#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riccitree/tree.hpp"

namespace riccitree {

// Spectral sandwich from the Schroedinger decomposition: for non-star trees
//   min over internal edges of -vtilde[e]  <=  lambda_max  <=  max_e -v[e].
// Stars have no internal edges; the lower bound is reported not applicable.
struct BoundsReport {
  double lambda_max = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool lower_applicable = false;
  bool lower_ok = true;  // vacuously true when not applicable
  bool upper_ok = false;
};

BoundsReport eigenvalue_bounds(const Tree& t);

// lim_{L -> infinity} of the largest Ricci eigenvalue of the depth-L ball in
// the d-regular tree: 1 - 4/d + 2*sqrt(d-1)/d.  Requires d >= 3.
double regular_ball_limit(int d);

// Perron eigenvalue before and after an edit.
struct AttachmentDelta {
  double lambda_before = 0.0;
  double lambda_after = 0.0;
  double delta = 0.0;
};

AttachmentDelta attachment_delta(const Tree& before, const Tree& after);
AttachmentDelta attachment_delta_leaf(const Tree& t, int v);
AttachmentDelta attachment_delta_subdivide(const Tree& t, int u, int v);
AttachmentDelta attachment_delta_tree(const Tree& t, int v, const Tree& h,
                                      const std::vector<int>& anchors);

// True iff attaching a single leaf at any vertex raises lambda_max by more
// than 1e-10.  Only meaningful in the nonpositive regime; requires
// lambda_max(t) <= 0 (within 1e-10) and t not a star.
bool check_leaf_attach_increase_negative(const Tree& t);

// One hop of a directed decreasing chain: the walk enters internal vertex
// `vertex` along `in_edge` and leaves along `out_edge`.  The recorded
// inequalities are s < 2*w_in, s > 2*w_out, and w_out < w_in.
struct ChainStep {
  int vertex = -1;
  int in_edge = -1;
  int out_edge = -1;
  double s = 0.0;
  double w_in = 0.0;
  double w_out = 0.0;
  bool in_ok = false;
  bool out_ok = false;
  bool decrease_ok = false;
};

struct ChainCertificate {
  int start_edge = -1;
  int toward = -1;  // the walk fans out from this endpoint of start_edge
  std::vector<ChainStep> steps;
  bool ok = false;
};

// Walks every path away from the head of the directed start edge (u -> v),
// recording the alternating inequalities at each internal vertex passed.
// Requires lambda < 0 and S_u < 2*w_start.
ChainCertificate verify_directional_chain(const Tree& t, const std::vector<double>& w,
                                          double lambda, int start_u, int start_v);

// Where the extremes of a Perron weighting sit, and whether the weights
// decrease away from the maximum.
struct StructureReport {
  std::vector<int> max_edges;  // ties within 1e-9 relative
  std::vector<int> min_edges;
  bool max_on_internal = false;
  bool min_on_leaf = false;
  bool two_max_share_vertex = true;  // vacuous unless exactly two max edges
  std::optional<bool> two_max_share_deg2_vertex;  // empty unless exactly two
  int shared_vertex_degree = 0;                   // 0 when not a two-max case
  bool radial_monotone = false;
  bool leaf_local_ok = false;
  std::vector<ChainCertificate> chain_certificates;
};

// Classifies argmax/argmin edges as leaf or internal.  max_on_internal is
// meaningful for non-star trees; min_on_leaf for lambda <= 0.
StructureReport locate_extremal_edges(const Tree& t, const std::vector<double>& w, double lambda);

// At every vertex: incident leaf edges carry equal weight (1e-9 relative)
// and each is strictly smaller than every incident internal edge.
bool check_leaf_local(const Tree& t, const std::vector<double>& w);

// Full monotonicity verdict for a Perron weighting with lambda < 0 on a
// non-star tree: at most two maximal edges; if two, they share a vertex
// (whose degree is reported -- it is not always 2); and the weights strictly
// decrease along every edge-path from the maximal set out to the leaf edges.
StructureReport check_radial_monotonicity(const Tree& t, const std::vector<double>& w,
                                          double lambda);

// Per-tree record of the structural checks run by the enumeration scans.
struct TreeScanRecord {
  std::string canonical_code;
  int n = 0;
  double lambda_max = 0.0;
  bool caterpillar = false;
  std::vector<std::string> violations;  // named failed checks, empty = clean
};

// Runs the whole battery (Einstein spread, bounds sandwich, caterpillar
// contrapositive, extremal location, leaf-local, radial monotonicity) on one
// tree; used by the scans and directly testable.
TreeScanRecord scan_one(const Tree& t);

// scan_one over every free tree with min_n <= n <= max_n, in enumeration
// order.  The parallel path distributes buffered edge lists over OpenMP
// threads; the serial path exists as a reference for testing and both must
// produce identical records.
std::vector<TreeScanRecord> scan_trees(int min_n, int max_n, bool parallel);

struct CaterpillarScanReport {
  long trees_checked = 0;
  long negative_lambda = 0;  // lambda_max < -1e-10
  long caterpillars = 0;
  std::vector<TreeScanRecord> violations;  // negative lambda but no caterpillar
};

// Contrapositive scan: every tree with lambda_max < -1e-10 must be a
// caterpillar.  max_n <= 14.
CaterpillarScanReport caterpillar_theorem_scan(int max_n);

}  // namespace riccitree
