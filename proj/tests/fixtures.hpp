#ifndef COHERE_TESTS_FIXTURES_HPP_
#define COHERE_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "cohere/cliques.hpp"
#include "cohere/configuration.hpp"
#include "cohere/generators.hpp"

namespace fixtures {

using cohere::Color;
using cohere::ColorMatrix;
using cohere::Vertex;

struct Member {
  std::string name;
  ColorMatrix matrix;
};

// T(5..12), L_2(3..10), J(6..10,3), H(3,3..6).
inline std::vector<Member> standard_corpus() {
  std::vector<Member> out;
  for (std::size_t m = 5; m <= 12; ++m)
    out.push_back({"T(" + std::to_string(m) + ")", cohere::triangular(m)});
  for (std::size_t m = 3; m <= 10; ++m)
    out.push_back({"L2(" + std::to_string(m) + ")", cohere::lattice(m)});
  for (std::size_t m = 6; m <= 10; ++m)
    out.push_back({"J(" + std::to_string(m) + ",3)", cohere::johnson(m, 3)});
  for (std::size_t m = 3; m <= 6; ++m)
    out.push_back({"H(3," + std::to_string(m) + ")", cohere::hamming(3, m)});
  return out;
}

inline ColorMatrix c5() { return cohere::from_graph(cohere::cycle_graph(5)); }

// Lex-ordered 2-subsets of [m], matching the vertex order of triangular(m).
inline std::vector<std::pair<Vertex, Vertex>> lex_pairs(std::size_t m) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b)
      out.push_back({a, b});
  return out;
}

// Orbitals of (Z_3 x Z_3) : Z_2 on two copies of Z_3, vertex (x, s) at 3s + x.
// Rank four: a non-symmetric pair inside each copy and a symmetric color of
// degree n/2 across the copies.
inline ColorMatrix layered_cycles() {
  cohere::PermutationList perms;
  perms.degree = 6;
  perms.generators = {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {3, 4, 5, 0, 1, 2}};
  return cohere::orbital_configuration(perms);
}

// Cliques of T(m): the m stars {a,*}.
inline cohere::CliqueGeometry star_geometry(std::size_t m) {
  auto pairs = lex_pairs(m);
  cohere::CliqueGeometry g;
  g.cliques.resize(m);
  g.incidence.resize(pairs.size());
  for (Vertex x = 0; x < pairs.size(); ++x) {
    g.cliques[pairs[x].first].push_back(x);
    g.cliques[pairs[x].second].push_back(x);
  }
  for (std::uint32_t c = 0; c < m; ++c)
    for (Vertex x : g.cliques[c])
      g.incidence[x].push_back(c);
  return g;
}

// Cliques of L_2(m): rows then columns.
inline cohere::CliqueGeometry rook_geometry(std::size_t m) {
  cohere::CliqueGeometry g;
  g.cliques.resize(2 * m);
  g.incidence.resize(m * m);
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < m; ++b) {
      const Vertex x = a * m + b;
      g.cliques[a].push_back(x);
      g.cliques[m + b].push_back(x);
      g.incidence[x] = {a, static_cast<std::uint32_t>(m + b)};
    }
  return g;
}

}  // namespace fixtures

#endif  // COHERE_TESTS_FIXTURES_HPP_
