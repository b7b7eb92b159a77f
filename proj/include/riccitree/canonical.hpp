#pragma once

#include <string>
#include <vector>

#include "riccitree/tree.hpp"

namespace riccitree {

// One or two vertices minimizing the largest component size after removal.
std::vector<int> centroids(const Tree& t);

// Nested-parentheses code of the subtree at v seen from parent p (-1 for the
// root); child codes sorted, so equal codes <=> rooted isomorphism.
std::string rooted_code(const Tree& t, int v, int p);

// Centroid-rooted canonical form; two-centroid trees take the lexicographic
// minimum of both rootings.  Equal codes <=> isomorphic as free trees.
std::string canonical_code(const Tree& t);

bool isomorphic(const Tree& a, const Tree& b);

// Exhaustive permutation check, for validating canonical_code on small n.
bool isomorphic_bruteforce(const Tree& a, const Tree& b);

}  // namespace riccitree
