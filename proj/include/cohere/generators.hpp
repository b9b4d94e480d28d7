#ifndef COHERE_GENERATORS_HPP_
#define COHERE_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cohere/color_matrix.hpp"

namespace cohere {

// Simple undirected graph: no loops, no repeated edges.
struct GraphInput {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  // Throws PreconditionError on loops, duplicates, or out-of-range ends.
  void validate() const;
};

// Generators of a permutation group in image notation: perm[i] = p(i).
struct PermutationList {
  std::size_t degree = 0;
  std::vector<std::vector<Vertex>> generators;

  void validate() const;
};

// X(graph): diagonal 0, edge 1, non-edge 2. Absent classes are dropped, so
// K_n has rank 2 and an empty graph has rank 2 with the non-edge color 1.
// Coherence is not implied.
ColorMatrix from_graph(const GraphInput& g);

// Line graph L(H); vertices are the edges of H in the given order.
GraphInput line_graph(const GraphInput& h);

GraphInput complete_graph(std::size_t n);
GraphInput complete_bipartite_graph(std::size_t a, std::size_t b);
GraphInput cycle_graph(std::size_t n);
GraphInput path_graph(std::size_t n);

// X(T(m)), vertices = 2-subsets of [m] in lexicographic order. m >= 4.
ColorMatrix triangular(std::size_t m);

// X(L_2(m)), vertex (a,b) at index a*m + b. m >= 2.
ColorMatrix lattice(std::size_t m);

// Johnson scheme J(m,k): k-subsets of [m] in colex order, c(A,B) = |A \ B|.
// Requires m >= 2k >= 2.
ColorMatrix johnson(std::size_t m, std::size_t k);

// Hamming scheme H(d,m): words of length d over [m] in base-m order, colored
// by Hamming distance. Requires d >= 1, m >= 2.
ColorMatrix hamming(std::size_t d, std::size_t m);

// Swaps the edge and non-edge colors of a rank-3 graph configuration.
ColorMatrix complement_configuration(const ColorMatrix& m);

// Orbitals of the group generated by the permutations, canonically numbered.
ColorMatrix orbital_configuration(const PermutationList& perms);

// Paley graph on GF(q) for a prime q = 1 mod 4.
GraphInput paley_graph(std::size_t q);

// Shrikhande graph: Cayley graph of Z4 x Z4 with connection set
// {±(1,0), ±(0,1), ±(1,1)}; vertex (a,b) at index 4a + b.
GraphInput shrikhande_graph();

// Erdos-Renyi G(n, p) driven by a seeded counter stream.
GraphInput random_graph(std::size_t n, double p, std::uint64_t seed);

// Edge list text: first token n, then whitespace separated pairs "u v".
GraphInput parse_edge_list(std::string_view text);
// One permutation per line in image notation "p(0) p(1) ... p(n-1)".
PermutationList parse_permutations(std::string_view text);

}  // namespace cohere

#endif  // COHERE_GENERATORS_HPP_
