#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace riccitree {

// Finite simple tree on vertices 0..n-1.  The edge order fixed at construction
// is shared by every matrix row and weight vector downstream ("edge e <-> row e").
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;    // index = edge id
  std::vector<int> deg;                      // per-vertex degree
  std::vector<std::vector<int>> adj;         // vertex -> neighbor vertices
  std::vector<std::vector<int>> inc;         // vertex -> incident edge ids

  int m() const { return static_cast<int>(edges.size()); }
};

// Validates: ids in 0..n-1 with none isolated, no self-loops/duplicates,
// connected and acyclic.  Throws Error on violation.
Tree make_tree(int n, std::vector<std::pair<int, int>> edges);

// Edge-list text: one "u v" per line, '#' starts a comment, blank lines
// ignored.  Vertex ids must form 0..n-1 after reading.  Errors name the
// offending line.
Tree parse_tree(const std::string& text);
Tree parse_tree(std::istream& in);

// ---- family generators (deterministic labelings, documented per function) ----

// Vertices 0..n-1 in path order.
Tree path(int n);
// Center 0, leaves 1..m.
Tree star(int m);
// Central edge {0,1} first, then m leaves at 0 (ids 2..m+1), then n leaves
// at 1 (ids m+2..m+n+1).  d_0 = m+1, d_1 = n+1.
Tree double_star(int m, int n);
// Double star with the central edge replaced by a path through k new interior
// degree-2 vertices (central path has k+1 edges; k = 0 gives double_star).
// Leaf edges first, then the central path from center 0 to center 1.
Tree sub_double_star(int m, int n, int k);
// Spider: center 0 with m legs of two edges each, plus k leaves attached
// directly to the center.  Leg i uses vertices 1+2i (inner) and 2+2i (outer);
// direct leaves follow.
Tree tmk(int m, int k);
// Three legs of length two: center 0, inner vertices 1..3, outer 4..6, the
// three center edges first.  Same shape as tmk(3, 0), friendlier edge order.
Tree s32();
// Path on n_p vertices (0..n_p-1), its endpoint joined to the center c = n_p
// of a star whose total degree is n_s: the joining edge counts as one of the
// star's n_s rays, so c carries n_s - 1 further leaves.  Requires n_s >= 2.
Tree path_star(int n_p, int n_s);
// Path on n vertices with t extra leaves at the middle vertex (index
// ceil(n/2) counting from 1; for even n the two middle choices give mirror-
// isomorphic trees).
Tree central_branch(int n, int t);
// Ball of radius L around the root of the infinite d-regular tree: root 0 has
// d children, every deeper internal vertex has d-1 children, leaves at depth L.
Tree regular_ball(int d, int L);

// "name:p1,p2,..." e.g. "double-star:3,3", "ball:3,4", "path:5", "s32".
Tree parse_family(const std::string& spec);

// ---- edits (never renumber existing vertices) ----

// New vertex n adjacent to v; new edge appended last.
Tree attach_leaf(const Tree& t, int v);
// Replace edge {u,v} by two edges through a fresh degree-2 vertex: the edge's
// slot becomes {u, new}, and {new, v} is appended last.
Tree subdivide_edge(const Tree& t, int u, int v);
// Disjoint union of t and h (h's vertex x becomes t.n + x), plus one new edge
// {v, anchor} per anchor.  Edge order: t's edges, then h's, then the new ones.
Tree attach_tree(const Tree& t, int v, const Tree& h, const std::vector<int>& anchors);

// ---- structure predicates ----

bool is_star(const Tree& t);                 // at most one internal vertex
bool is_leaf_edge(const Tree& t, int e);     // an endpoint has degree 1
int leaf_edge_count_at(const Tree& t, int v);  // d^0_v: neighbors of v that are leaves
// True iff deleting all leaves yields a path (possibly empty or one vertex).
bool is_caterpillar(const Tree& t);
// Definitional brute force used to cross-check is_caterpillar in tests: some
// path in t covers every non-leaf vertex.
bool is_caterpillar_bruteforce(const Tree& t);

int edge_index(const Tree& t, int u, int v);  // -1 if absent

}  // namespace riccitree
