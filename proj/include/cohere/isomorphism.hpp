#ifndef COHERE_ISOMORPHISM_HPP_
#define COHERE_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "cohere/color_matrix.hpp"

namespace cohere {

struct IsomorphismSearch {
  // mapping[u] = image of u, with b(mapping[u], mapping[v]) = a(u,v).
  std::optional<std::vector<Vertex>> mapping;
  // False when the node budget ran out before the search finished.
  bool complete = true;
  std::size_t nodes = 0;
};

// Color-preserving isomorphism a -> b by individualization and naive
// refinement on the disjoint union, with backtracking. Colors must match
// exactly (no color permutation is searched).
IsomorphismSearch find_isomorphism(const ColorMatrix& a, const ColorMatrix& b,
                                   std::size_t node_budget = 200000);

// True iff b(perm[u], perm[v]) = a(u,v) for all u, v.
bool is_isomorphism(const ColorMatrix& a, const ColorMatrix& b, const std::vector<Vertex>& perm);

}  // namespace cohere

#endif  // COHERE_ISOMORPHISM_HPP_
