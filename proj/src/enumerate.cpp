#include "riccitree/enumerate.hpp"

#include <algorithm>

#include "riccitree/canonical.hpp"
#include "riccitree/error.hpp"

namespace riccitree {

namespace {

// Canonical level sequences of rooted trees in reverse lexicographic order:
// L[0] = 1 (root), L[i] = depth of vertex i, each subtree's sequence is
// maximal among its siblings'.  The first sequence is the path (1,2,...,n),
// the last is the star (1,2,2,...,2).  Successor: find the rightmost p with
// L[p] > 2, let q be the rightmost index before p with L[q] = L[p] - 1, then
// repeat the block L[q..p-1] cyclically over the tail.
bool next_level_sequence(std::vector<int>& L) {
  int n = static_cast<int>(L.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (L[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (L[i] == L[p] - 1) {
      q = i;
      break;
    }
  int d = p - q;
  for (int i = p; i < n; ++i) L[i] = L[i - d];
  return true;
}

std::vector<std::pair<int, int>> edges_from_levels(const std::vector<int>& L) {
  // Parent of vertex i is the latest earlier vertex one level up.
  std::vector<std::pair<int, int>> edges;
  edges.reserve(L.size() - 1);
  std::vector<int> latest_at_level;  // index = level - 1
  for (int i = 0; i < static_cast<int>(L.size()); ++i) {
    int lv = L[i];
    if (lv > 1) edges.emplace_back(latest_at_level[lv - 2], i);
    if (static_cast<int>(latest_at_level.size()) >= lv)
      latest_at_level[lv - 1] = i;
    else
      latest_at_level.push_back(i);
  }
  return edges;
}

}  // namespace

void for_each_free_tree_edges(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (n < 2 || n > 18) fail(ErrorKind::OutOfRange, "free-tree enumeration supports 2 <= n <= 18");
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i + 1;
  do {
    auto edges = edges_from_levels(L);
    Tree t = make_tree(n, edges);
    auto cs = centroids(t);
    if (cs[0] != 0 && (cs.size() < 2 || cs[1] != 0)) continue;  // root must be a centroid
    if (cs.size() == 2) {
      int other = (cs[0] == 0) ? cs[1] : cs[0];
      // Keep exactly one of the two centroid rootings per free tree.
      if (rooted_code(t, 0, -1) > rooted_code(t, other, -1)) continue;
    }
    fn(t.edges);
  } while (next_level_sequence(L));
}

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn) {
  for_each_free_tree_edges(n, [&](const std::vector<std::pair<int, int>>& edges) {
    fn(make_tree(n, edges));
  });
}

std::uint64_t count_free_trees(int n) {
  std::uint64_t c = 0;
  for_each_free_tree_edges(n, [&](const std::vector<std::pair<int, int>>&) { ++c; });
  return c;
}

std::vector<Tree> all_free_trees(int n) {
  std::vector<Tree> out;
  for_each_free_tree(n, [&](const Tree& t) { out.push_back(t); });
  return out;
}

Tree tree_from_pruefer(const std::vector<int>& code) {
  int n = static_cast<int>(code.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int v : code) {
    if (v < 0 || v >= n) fail(ErrorKind::BadVertexId, "pruefer entry out of range");
    deg[v]++;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : code) {
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1 && v < ptr) {
      leaf = v;  // became a leaf below the sweep pointer: use it right away
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return make_tree(n, edges);
}

Tree random_tree(int n, std::mt19937& rng) {
  if (n < 2) fail(ErrorKind::OutOfRange, "random_tree needs n >= 2");
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& v : code) v = pick(rng);
  return tree_from_pruefer(code);
}

}  // namespace riccitree
