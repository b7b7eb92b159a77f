#include "riccitree/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace riccitree {

std::vector<int> centroids(const Tree& t) {
  if (t.n == 1) return {0};
  // Iterative DFS order from vertex 0, then subtree sizes bottom-up.
  std::vector<int> par(t.n, -1), order;
  order.reserve(t.n);
  std::vector<int> stack{0};
  std::vector<char> seen(t.n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int u : t.adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        par[u] = v;
        stack.push_back(u);
      }
  }
  std::vector<int> cnt(t.n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (par[*it] >= 0) cnt[par[*it]] += cnt[*it];

  int best = t.n + 1;
  std::vector<int> cs;
  for (int v = 0; v < t.n; ++v) {
    int mx = t.n - cnt[v];  // the component containing the parent
    for (int u : t.adj[v])
      if (par[u] == v) mx = std::max(mx, cnt[u]);
    if (mx < best) {
      best = mx;
      cs = {v};
    } else if (mx == best) {
      cs.push_back(v);
    }
  }
  return cs;
}

std::string rooted_code(const Tree& t, int v, int p) {
  std::vector<std::string> subs;
  for (int u : t.adj[v])
    if (u != p) subs.push_back(rooted_code(t, u, v));
  std::sort(subs.begin(), subs.end());
  std::string code = "(";
  for (auto& s : subs) code += s;
  code += ")";
  return code;
}

std::string canonical_code(const Tree& t) {
  auto cs = centroids(t);
  std::string code = rooted_code(t, cs[0], -1);
  if (cs.size() == 2) code = std::min(code, rooted_code(t, cs[1], -1));
  return code;
}

bool isomorphic(const Tree& a, const Tree& b) {
  if (a.n != b.n) return false;
  return canonical_code(a) == canonical_code(b);
}

bool isomorphic_bruteforce(const Tree& a, const Tree& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  std::set<std::pair<int, int>> eb;
  for (auto [u, v] : b.edges) eb.insert(std::minmax(u, v));
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges)
      if (!eb.count(std::minmax(perm[u], perm[v]))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace riccitree
