#include "riccitree/tree.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

#include "riccitree/error.hpp"

namespace riccitree {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadVertexId: return "BadVertexId";
    case ErrorKind::BadEdge: return "BadEdge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorKind::BadAlpha: return "BadAlpha";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorKind::UnknownExperiment: return "UnknownExperiment";
  }
  return "Error";
}

Tree make_tree(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) fail(ErrorKind::InvalidParams, "vertex count must be >= 1");
  Tree t;
  t.n = n;
  t.edges = std::move(edges);
  t.deg.assign(n, 0);
  t.adj.assign(n, {});
  t.inc.assign(n, {});

  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < t.m(); ++e) {
    auto [u, v] = t.edges[e];
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(ErrorKind::BadVertexId, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                       "} outside 0.." + std::to_string(n - 1));
    if (u == v) fail(ErrorKind::CycleDetected, "self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail(ErrorKind::DuplicateEdge, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} repeated");
    t.deg[u]++;
    t.deg[v]++;
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
    t.inc[u].push_back(e);
    t.inc[v].push_back(e);
  }

  if (t.m() > n - 1) fail(ErrorKind::CycleDetected, "more than n-1 edges");
  if (t.m() < n - 1) fail(ErrorKind::Disconnected, "fewer than n-1 edges");
  if (n > 1) {
    for (int v = 0; v < n; ++v)
      if (t.deg[v] == 0) fail(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " is isolated");
  }

  // n-1 edges + connected <=> tree; a BFS settles connectivity.
  std::vector<char> vis(n, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : t.adj[v])
      if (!vis[u]) {
        vis[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  if (reached != n) fail(ErrorKind::Disconnected, "graph is not connected");
  return t;
}

Tree parse_tree(const std::string& text) {
  std::istringstream in(text);
  return parse_tree(in);
}

Tree parse_tree(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_line;  // source line of each edge, for error messages
  std::string line;
  int lineno = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) continue;  // blank / comment-only line
    std::string where = "line " + std::to_string(lineno);
    if (!(ls >> v)) fail(ErrorKind::BadVertexId, where + ": expected two vertex ids");
    std::string extra;
    if (ls >> extra) fail(ErrorKind::BadVertexId, where + ": trailing token '" + extra + "'");
    if (u < 0 || v < 0) fail(ErrorKind::BadVertexId, where + ": negative vertex id");
    if (u == v) fail(ErrorKind::CycleDetected, where + ": self-loop at " + std::to_string(u));
    for (size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (std::minmax<long>(a, b) == std::minmax(u, v))
        fail(ErrorKind::DuplicateEdge,
             where + ": duplicates edge from line " + std::to_string(edge_line[i]));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    edge_line.push_back(lineno);
    max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
  }
  if (edges.empty()) fail(ErrorKind::InvalidParams, "no edges in input");
  int n = max_id + 1;
  // make_tree reports isolated vertices, which is the "ids must form 0..n-1" check
  return make_tree(n, std::move(edges));
}

Tree path(int n) {
  if (n < 2) fail(ErrorKind::InvalidParams, "path needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_tree(n, std::move(e));
}

Tree star(int m) {
  if (m < 1) fail(ErrorKind::InvalidParams, "star needs m >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
  return make_tree(m + 1, std::move(e));
}

Tree double_star(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorKind::InvalidParams, "double star needs m,n >= 1");
  std::vector<std::pair<int, int>> e;
  e.emplace_back(0, 1);
  for (int i = 0; i < m; ++i) e.emplace_back(0, 2 + i);
  for (int i = 0; i < n; ++i) e.emplace_back(1, 2 + m + i);
  return make_tree(m + n + 2, std::move(e));
}

Tree sub_double_star(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 0) fail(ErrorKind::InvalidParams, "need m,n >= 1 and k >= 0");
  if (k == 0) return double_star(m, n);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) e.emplace_back(0, 2 + i);
  for (int i = 0; i < n; ++i) e.emplace_back(1, 2 + m + i);
  int first_mid = 2 + m + n;
  e.emplace_back(0, first_mid);
  for (int i = 1; i < k; ++i) e.emplace_back(first_mid + i - 1, first_mid + i);
  e.emplace_back(first_mid + k - 1, 1);
  return make_tree(m + n + 2 + k, std::move(e));
}

Tree tmk(int m, int k) {
  if (m < 1 || k < 0) fail(ErrorKind::InvalidParams, "need m >= 1 and k >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(0, 1 + 2 * i);
    e.emplace_back(1 + 2 * i, 2 + 2 * i);
  }
  for (int j = 0; j < k; ++j) e.emplace_back(0, 1 + 2 * m + j);
  return make_tree(1 + 2 * m + k, std::move(e));
}

Tree s32() {
  // Center 0, inner vertices 1..3, outer 4..6; the three center edges come
  // first so weight vectors read (inner, inner, inner, outer, outer, outer).
  return make_tree(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

Tree path_star(int n_p, int n_s) {
  if (n_p < 1 || n_s < 2) fail(ErrorKind::InvalidParams, "need n_p >= 1 and n_s >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n_p; ++i) e.emplace_back(i, i + 1);
  int c = n_p;
  e.emplace_back(n_p - 1, c);
  for (int i = 1; i < n_s; ++i) e.emplace_back(c, c + i);
  return make_tree(n_p + n_s, std::move(e));
}

Tree central_branch(int n, int t) {
  if (n < 2 || t < 0) fail(ErrorKind::InvalidParams, "need n >= 2 and t >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  int mid = (n - 1) / 2;  // ceil(n/2) in 1-indexed terms
  for (int j = 0; j < t; ++j) e.emplace_back(mid, n + j);
  return make_tree(n + t, std::move(e));
}

Tree regular_ball(int d, int L) {
  if (d < 3 || L < 1) fail(ErrorKind::InvalidParams, "need d >= 3 and L >= 1");
  std::vector<std::pair<int, int>> e;
  std::vector<int> frontier{0};
  int next = 1;
  for (int depth = 1; depth <= L; ++depth) {
    int children = (depth == 1) ? d : d - 1;
    std::vector<int> nf;
    for (int v : frontier)
      for (int c = 0; c < children; ++c) {
        e.emplace_back(v, next);
        nf.push_back(next++);
      }
    frontier = std::move(nf);
  }
  return make_tree(next, std::move(e));
}

Tree parse_family(const std::string& spec) {
  std::string name = spec;
  std::vector<int> p;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::istringstream rs(rest);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      try {
        size_t pos = 0;
        int val = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        p.push_back(val);
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidParams, "bad family parameter '" + tok + "' in '" + spec + "'");
      }
    }
  }
  auto want = [&](size_t k) {
    if (p.size() != k)
      fail(ErrorKind::InvalidParams,
           "family '" + name + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "path") { want(1); return path(p[0]); }
  if (name == "star") { want(1); return star(p[0]); }
  if (name == "double-star") { want(2); return double_star(p[0], p[1]); }
  if (name == "sub-double-star") { want(3); return sub_double_star(p[0], p[1], p[2]); }
  if (name == "tmk") { want(2); return tmk(p[0], p[1]); }
  if (name == "path-star") { want(2); return path_star(p[0], p[1]); }
  if (name == "central") { want(2); return central_branch(p[0], p[1]); }
  if (name == "ball") { want(2); return regular_ball(p[0], p[1]); }
  if (name == "s32") { want(0); return s32(); }
  fail(ErrorKind::InvalidParams, "unknown family '" + name + "'");
}

Tree attach_leaf(const Tree& t, int v) {
  if (v < 0 || v >= t.n) fail(ErrorKind::BadVertexId, "attach_leaf at " + std::to_string(v));
  auto e = t.edges;
  e.emplace_back(v, t.n);
  return make_tree(t.n + 1, std::move(e));
}

Tree subdivide_edge(const Tree& t, int u, int v) {
  int idx = edge_index(t, u, v);
  if (idx < 0)
    fail(ErrorKind::BadEdge, "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  auto e = t.edges;
  e[idx] = {u, t.n};
  e.emplace_back(t.n, v);
  return make_tree(t.n + 1, std::move(e));
}

Tree attach_tree(const Tree& t, int v, const Tree& h, const std::vector<int>& anchors) {
  if (v < 0 || v >= t.n) fail(ErrorKind::BadVertexId, "attach vertex " + std::to_string(v));
  if (anchors.empty()) fail(ErrorKind::BadVertexId, "attach_tree needs at least one anchor");
  auto e = t.edges;
  for (auto [a, b] : h.edges) e.emplace_back(t.n + a, t.n + b);
  for (int a : anchors) {
    if (a < 0 || a >= h.n) fail(ErrorKind::BadVertexId, "anchor " + std::to_string(a));
    e.emplace_back(v, t.n + a);
  }
  // Multiple anchors into the same attached tree would close a cycle; make_tree rejects that.
  return make_tree(t.n + h.n, std::move(e));
}

bool is_star(const Tree& t) {
  int internal = 0;
  for (int v = 0; v < t.n; ++v)
    if (t.deg[v] >= 2) ++internal;
  return internal <= 1;
}

bool is_leaf_edge(const Tree& t, int e) {
  auto [u, v] = t.edges[e];
  return t.deg[u] == 1 || t.deg[v] == 1;
}

int leaf_edge_count_at(const Tree& t, int v) {
  int c = 0;
  for (int u : t.adj[v])
    if (t.deg[u] == 1) ++c;
  return c;
}

bool is_caterpillar(const Tree& t) {
  // Internal vertices of a tree induce a subtree, so it is a path iff no
  // internal vertex has three or more internal neighbors.
  for (int v = 0; v < t.n; ++v) {
    if (t.deg[v] < 2) continue;
    int internal_neighbors = 0;
    for (int u : t.adj[v])
      if (t.deg[u] >= 2) ++internal_neighbors;
    if (internal_neighbors > 2) return false;
  }
  return true;
}

bool is_caterpillar_bruteforce(const Tree& t) {
  // Try every ordered vertex pair as path endpoints; the tree path between
  // them must contain all internal vertices.
  std::vector<int> internal;
  for (int v = 0; v < t.n; ++v)
    if (t.deg[v] >= 2) internal.push_back(v);
  if (internal.size() <= 1) return true;
  for (int a = 0; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b) {
      // unique a..b path via parent pointers
      std::vector<int> par(t.n, -2);
      std::queue<int> q;
      q.push(a);
      par[a] = -1;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : t.adj[x])
          if (par[y] == -2) {
            par[y] = x;
            q.push(y);
          }
      }
      std::vector<char> on_path(t.n, 0);
      for (int x = b; x != -1; x = par[x]) on_path[x] = 1;
      bool all = true;
      for (int v : internal)
        if (!on_path[v]) { all = false; break; }
      if (all) return true;
    }
  return false;
}

int edge_index(const Tree& t, int u, int v) {
  if (u < 0 || u >= t.n || v < 0 || v >= t.n) return -1;
  for (int e : t.inc[u]) {
    auto [a, b] = t.edges[e];
    if ((a == u && b == v) || (a == v && b == u)) return e;
  }
  return -1;
}

}  // namespace riccitree
