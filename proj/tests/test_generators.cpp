#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <variant>

#include "cohere/configuration.hpp"
#include "cohere/generators.hpp"
#include "cohere/isomorphism.hpp"
#include "cohere/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cohere;

namespace {

struct Srg {
  std::size_t n, k, lambda, mu;
};

// SRG parameters of a rank-3 graph configuration, counted by the oracle with
// color 1 as the edge color.
Srg srg_parameters(const ColorMatrix& m) {
  auto p = oracle::tensor(m);
  EXPECT_TRUE(p.has_value());
  const std::size_t r = m.rank();
  return {m.size(), oracle::degree(m, 1), (*p)[1][1 * r + 1], (*p)[2][1 * r + 1]};
}

bool coherent(const ColorMatrix& m) {
  return std::holds_alternative<StructureConstants>(compute_structure_constants(m));
}

std::vector<std::uint64_t> degrees(const ColorMatrix& m) {
  std::vector<std::uint64_t> out;
  for (Color c = 1; c < m.rank(); ++c)
    out.push_back(oracle::degree(m, c));
  return out;
}

// Image of sigma on lex-ordered 2-subsets of [m].
std::vector<Vertex> induced_on_pairs(std::size_t m, const std::vector<Vertex>& sigma) {
  auto pairs = fixtures::lex_pairs(m);
  std::vector<Vertex> out;
  for (auto [a, b] : pairs) {
    auto img = std::minmax(sigma[a], sigma[b]);
    auto it = std::find(pairs.begin(), pairs.end(), std::pair<Vertex, Vertex>(img.first, img.second));
    out.push_back(static_cast<Vertex>(it - pairs.begin()));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// from_graph
// ---------------------------------------------------------------------------

TEST(FromGraph, FiveCycleIsCoherentRankThree) {
  auto m = fixtures::c5();
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_TRUE(coherent(m));
  auto s = srg_parameters(m);
  EXPECT_EQ(s.k, 2u);
  EXPECT_EQ(s.lambda, 0u);
  EXPECT_EQ(s.mu, 1u);
}

TEST(FromGraph, PathIsNotCoherent) {
  auto m = from_graph(path_graph(3));
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_FALSE(coherent(m));
}

TEST(FromGraph, CompleteAndEmptyGraphsHaveRankTwo) {
  EXPECT_EQ(from_graph(complete_graph(4)).rank(), 2u);
  auto empty = from_graph(GraphInput{4, {}});
  EXPECT_EQ(empty.rank(), 2u);
  EXPECT_EQ(empty(0, 1), 1);
  EXPECT_EQ(from_graph(GraphInput{1, {}}).rank(), 1u);
}

TEST(FromGraph, InvalidGraphsAreRejected) {
  EXPECT_THROW(from_graph(GraphInput{3, {{0, 0}}}), PreconditionError);
  EXPECT_THROW(from_graph(GraphInput{3, {{0, 1}, {1, 0}}}), PreconditionError);
  EXPECT_THROW(from_graph(GraphInput{3, {{0, 3}}}), PreconditionError);
}

TEST(FromGraph, LineGraphOfAStar) {
  auto l = line_graph(complete_bipartite_graph(1, 4));
  EXPECT_EQ(l.n, 4u);
  EXPECT_EQ(l.edges.size(), 6u);
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

TEST(Triangular, FiveIsSrg10_6_3_4) {
  auto s = srg_parameters(triangular(5));
  EXPECT_EQ(s.n, 10u);
  EXPECT_EQ(s.k, 6u);
  EXPECT_EQ(s.lambda, 3u);
  EXPECT_EQ(s.mu, 4u);
}

TEST(Triangular, SixHasDegreeEight) {
  auto m = triangular(6);
  EXPECT_EQ(m.size(), 15u);
  EXPECT_EQ(oracle::degree(m, 1), 8u);
}

TEST(Triangular, FourIsImprimitive) {
  auto m = triangular(4);
  EXPECT_EQ(m.size(), 6u);
  auto r = is_primitive(m);
  EXPECT_FALSE(r.primitive);
  EXPECT_EQ(r.disconnected_color, std::optional<Color>(2));
  EXPECT_FALSE(oracle::strongly_connected(m, 2));
}

TEST(Triangular, SmallParametersRejected) {
  EXPECT_THROW(triangular(3), PreconditionError);
}

TEST(Triangular, EqualsLineGraphOfCompleteGraph) {
  for (std::size_t m = 4; m <= 12; ++m)
    EXPECT_EQ(triangular(m), from_graph(line_graph(complete_graph(m)))) << m;
}

TEST(Lattice, ThreeIsSrg9_4_1_2) {
  auto s = srg_parameters(lattice(3));
  EXPECT_EQ(s.n, 9u);
  EXPECT_EQ(s.k, 4u);
  EXPECT_EQ(s.lambda, 1u);
  EXPECT_EQ(s.mu, 2u);
}

TEST(Lattice, FourHasDegreeSix) {
  auto m = lattice(4);
  EXPECT_EQ(m.size(), 16u);
  EXPECT_EQ(oracle::degree(m, 1), 6u);
}

TEST(Lattice, TwoIsTheFourCycle) {
  auto m = lattice(2);
  EXPECT_EQ(m.size(), 4u);
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_FALSE(is_primitive(m).primitive);
  EXPECT_THROW(lattice(1), PreconditionError);
}

TEST(Lattice, EqualsLineGraphOfCompleteBipartiteGraph) {
  for (std::size_t m = 2; m <= 10; ++m)
    EXPECT_EQ(lattice(m), from_graph(line_graph(complete_bipartite_graph(m, m)))) << m;
}

TEST(Johnson, SevenThreeDegrees) {
  auto m = johnson(7, 3);
  EXPECT_EQ(m.size(), 35u);
  EXPECT_EQ(degrees(m), (std::vector<std::uint64_t>{12, 18, 4}));
  EXPECT_TRUE(coherent(m));
}

TEST(Johnson, FiveTwoIsTriangularFiveUnderTheSubsetBijection) {
  auto j = johnson(5, 2);
  ASSERT_EQ(j.size(), 10u);
  // colex position -> lex position of the same 2-subset
  std::vector<std::pair<Vertex, Vertex>> colex;
  for (Vertex b = 1; b < 5; ++b)
    for (Vertex a = 0; a < b; ++a)
      colex.push_back({a, b});
  auto lex = fixtures::lex_pairs(5);
  std::vector<Vertex> perm;
  for (auto p : colex)
    perm.push_back(static_cast<Vertex>(std::find(lex.begin(), lex.end(), p) - lex.begin()));
  EXPECT_EQ(permute_vertices(j, perm), triangular(5));
}

TEST(Johnson, SixThreeHasAntipodalMatching) {
  auto m = johnson(6, 3);
  EXPECT_EQ(m.size(), 20u);
  EXPECT_EQ(oracle::degree(m, 3), 1u);
  EXPECT_FALSE(is_primitive(m).primitive);
}

TEST(Johnson, ParameterViolationsRejected) {
  EXPECT_THROW(johnson(5, 3), PreconditionError);
  EXPECT_THROW(johnson(4, 0), PreconditionError);
}

TEST(Johnson, RankIsKPlusOne) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t m = 2 * k; m <= 9; ++m)
      EXPECT_EQ(johnson(m, k).rank(), k + 1);
}

TEST(Hamming, ThreeThreeDegrees) {
  auto m = hamming(3, 3);
  EXPECT_EQ(m.size(), 27u);
  EXPECT_EQ(degrees(m), (std::vector<std::uint64_t>{6, 12, 8}));
}

TEST(Hamming, TwoTwoIsTheFourCycle) {
  auto m = hamming(2, 2);
  EXPECT_EQ(m.size(), 4u);
  EXPECT_FALSE(is_primitive(m).primitive);
  EXPECT_TRUE(find_isomorphism(m, lattice(2)).mapping.has_value());
}

TEST(Hamming, ThreeFourAntipodalDegree) {
  auto m = hamming(3, 4);
  EXPECT_EQ(m.size(), 64u);
  EXPECT_EQ(oracle::degree(m, 3), 27u);
  EXPECT_THROW(hamming(0, 3), PreconditionError);
  EXPECT_THROW(hamming(2, 1), PreconditionError);
}

TEST(Families, AllCoherentForTestedParameters) {
  for (std::size_t m = 4; m <= 12; ++m) {
    EXPECT_TRUE(coherent(triangular(m))) << m;
    EXPECT_TRUE(coherent(lattice(m))) << m;
  }
  for (std::size_t m = 6; m <= 10; ++m)
    EXPECT_TRUE(coherent(johnson(m, 3))) << m;
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t m = 2; m <= 4; ++m)
      EXPECT_TRUE(coherent(hamming(d, m))) << d << "," << m;
}

// ---------------------------------------------------------------------------
// Complements
// ---------------------------------------------------------------------------

TEST(Complement, TriangularFiveIsPetersen) {
  auto p = complement_configuration(triangular(5));
  auto s = srg_parameters(p);
  EXPECT_EQ(s.k, 3u);
  EXPECT_EQ(s.lambda, 0u);
  EXPECT_EQ(s.mu, 1u);
}

TEST(Complement, FiveCycleIsSelfComplementary) {
  auto c = complement_configuration(fixtures::c5());
  EXPECT_TRUE(find_isomorphism(c, fixtures::c5()).mapping.has_value());
  EXPECT_TRUE(oracle::isomorphic(c, fixtures::c5()));
}

TEST(Complement, IsAnInvolution) {
  auto t = triangular(6);
  EXPECT_EQ(canonical_renumbering(complement_configuration(complement_configuration(t))),
            canonical_renumbering(t));
}

TEST(Complement, RequiresRankThree) {
  EXPECT_THROW(complement_configuration(johnson(7, 3)), PreconditionError);
}

// ---------------------------------------------------------------------------
// Orbital configurations
// ---------------------------------------------------------------------------

TEST(Orbital, CyclicGroupOfOrderFive) {
  PermutationList perms{5, {{1, 2, 3, 4, 0}}};
  auto m = orbital_configuration(perms);
  EXPECT_EQ(m.size(), 5u);
  EXPECT_EQ(m.rank(), 5u);
  EXPECT_TRUE(coherent(m));
}

TEST(Orbital, SymmetricGroupOnPairsGivesTriangular) {
  PermutationList perms;
  perms.degree = 10;
  perms.generators = {induced_on_pairs(5, {1, 0, 2, 3, 4}), induced_on_pairs(5, {1, 2, 3, 4, 0})};
  auto m = orbital_configuration(perms);
  EXPECT_EQ(m, canonical_renumbering(triangular(5)));
}

TEST(Orbital, TrivialGroupIsDiscrete) {
  PermutationList perms{4, {{0, 1, 2, 3}}};
  auto m = orbital_configuration(perms);
  EXPECT_EQ(m.rank(), 16u);
  EXPECT_EQ(m.diagonal_color_count(), 4u);
  EXPECT_TRUE(coherent(m));
}

TEST(Orbital, AlwaysCoherentOnRandomGenerators) {
  CounterRng rng(3, 9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng.below(6);
    PermutationList perms{n, {}};
    const std::size_t gens = 1 + rng.below(2);
    for (std::size_t g = 0; g < gens; ++g) {
      std::vector<Vertex> p(n);
      std::iota(p.begin(), p.end(), 0);
      for (std::size_t i = n - 1; i > 0; --i)
        std::swap(p[i], p[rng.below(i + 1)]);
      perms.generators.push_back(p);
    }
    auto m = orbital_configuration(perms);
    EXPECT_TRUE(coherent(m));
    EXPECT_TRUE(oracle::is_coherent(m));
  }
}

TEST(Orbital, RejectsNonBijections) {
  EXPECT_THROW(orbital_configuration(PermutationList{3, {{0, 0, 1}}}), PreconditionError);
  EXPECT_THROW(orbital_configuration(PermutationList{3, {{0, 1}}}), PreconditionError);
}

// ---------------------------------------------------------------------------
// Other graphs
// ---------------------------------------------------------------------------

TEST(Paley, ThirteenIsSrg13_6_2_3) {
  auto s = srg_parameters(from_graph(paley_graph(13)));
  EXPECT_EQ(s.k, 6u);
  EXPECT_EQ(s.lambda, 2u);
  EXPECT_EQ(s.mu, 3u);
  EXPECT_THROW(paley_graph(7), PreconditionError);
  EXPECT_THROW(paley_graph(25), PreconditionError);
}

TEST(Shrikhande, HasLatticeFourParametersButIsNotLatticeFour) {
  auto m = from_graph(shrikhande_graph());
  auto s = srg_parameters(m);
  EXPECT_EQ(s.n, 16u);
  EXPECT_EQ(s.k, 6u);
  EXPECT_EQ(s.lambda, 2u);
  EXPECT_EQ(s.mu, 2u);
  auto search = find_isomorphism(m, lattice(4));
  EXPECT_FALSE(search.mapping.has_value());
  EXPECT_TRUE(search.complete);
}

TEST(RandomGraph, DeterminedBySeed) {
  auto a = random_graph(20, 0.5, 7);
  auto b = random_graph(20, 0.5, 7);
  auto c = random_graph(20, 0.5, 8);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_NE(a.edges, c.edges);
  EXPECT_TRUE(random_graph(6, 0.0, 1).edges.empty());
  EXPECT_EQ(random_graph(6, 1.0, 1).edges.size(), 15u);
}

TEST(SmallGraphs, CycleAndPathEdgeCounts) {
  EXPECT_EQ(cycle_graph(6).edges.size(), 6u);
  EXPECT_EQ(path_graph(6).edges.size(), 5u);
  EXPECT_EQ(complete_bipartite_graph(2, 3).edges.size(), 6u);
}

// ---------------------------------------------------------------------------
// Text inputs
// ---------------------------------------------------------------------------

TEST(EdgeList, ParsesCommentsAndPairs) {
  auto g = parse_edge_list("# pentagon\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  EXPECT_EQ(g.n, 5u);
  EXPECT_EQ(g.edges.size(), 5u);
  EXPECT_TRUE(find_isomorphism(from_graph(g), fixtures::c5()).mapping.has_value());
}

TEST(EdgeList, MalformedInputRejected) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1\n2"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 a\n"), ParseError);
}

TEST(Permutations, ParsesOnePerLine) {
  auto p = parse_permutations("1 2 3 4 0\n# reflection\n0 4 3 2 1\n");
  EXPECT_EQ(p.degree, 5u);
  ASSERT_EQ(p.generators.size(), 2u);
  EXPECT_EQ(p.generators[1], (std::vector<Vertex>{0, 4, 3, 2, 1}));
  auto m = orbital_configuration(p);
  EXPECT_EQ(m, canonical_renumbering(fixtures::c5()));
}

TEST(Permutations, MalformedInputRejected) {
  EXPECT_THROW(parse_permutations(""), ParseError);
  EXPECT_THROW(parse_permutations("0 1 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_permutations("0 0 1\n"), ParseError);
  EXPECT_THROW(parse_permutations("0 1 3\n"), ParseError);
}
