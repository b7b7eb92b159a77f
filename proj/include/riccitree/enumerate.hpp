#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "riccitree/tree.hpp"

namespace riccitree {

// Streams one representative per isomorphism class of free trees on n
// vertices (2 <= n <= 18).  Rooted trees are generated as canonical level
// sequences via the successor rule (path first, star last); a rooted tree is
// kept iff its root is the centroid, with a rooted-code tiebreak when there
// are two centroids.  Counts match the free-tree sequence
// 1,1,2,3,6,11,23,47,106,... for n = 2,3,4,...
void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn);

// Edge lists only (cheaper to buffer for parallel consumption).
void for_each_free_tree_edges(int n,
                              const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

std::uint64_t count_free_trees(int n);
std::vector<Tree> all_free_trees(int n);

// Tree on n = |code| + 2 vertices from a Pruefer sequence (entries in
// 0..n-1).  Every labeled tree arises from exactly one sequence; used as the
// enumeration oracle in tests.
Tree tree_from_pruefer(const std::vector<int>& code);

// Uniform random labeled tree on n >= 2 vertices (random Pruefer sequence).
Tree random_tree(int n, std::mt19937& rng);

}  // namespace riccitree
