#ifndef COHERE_CLIQUES_HPP_
#define COHERE_CLIQUES_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cohere/analysis.hpp"
#include "cohere/configuration.hpp"

namespace cohere {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Clique = std::vector<Vertex>;  // sorted

// G(X): u ~ v iff c(u,v) is nondominant and nondiagonal.
class NondominantGraph {
 public:
  // Throws PreconditionError without a dominant color and InvariantError if
  // the graph is not rho-regular with exactly mu common neighbors on every
  // nonadjacent pair.
  NondominantGraph(const Configuration& cfg, const ParameterProfile& pr);

  std::size_t size() const { return adj_.size(); }
  std::size_t valency() const { return valency_; }
  std::uint64_t mu() const { return mu_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u][v]; }
  const Bitset& neighbors(Vertex u) const { return adj_[u]; }
  std::span<const Vertex> neighbor_list(Vertex u) const { return lists_[u]; }

 private:
  std::vector<Bitset> adj_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t valency_ = 0;
  std::uint64_t mu_ = 0;
};

NondominantGraph nondominant_graph(const Configuration& cfg, const ParameterProfile& pr);

// An undirected graph on local indices 0..k-1 carrying the global vertex ids.
struct LocalGraph {
  std::vector<Vertex> vertices;
  std::vector<Bitset> adj;

  std::size_t size() const { return vertices.size(); }
  static LocalGraph induced(const NondominantGraph& g, std::vector<Vertex> vertices);
  static LocalGraph from_edges(std::size_t k, std::span<const std::pair<Vertex, Vertex>> edges);
};

enum class MetschStatus { ok, hypothesis_failed, partition_failed };
const char* to_string(MetschStatus s);

struct MetschResult {
  MetschStatus status = MetschStatus::ok;
  std::vector<Clique> cliques;  // global ids, in construction order
  Clique offending;
  std::string message;
};

struct MetschOptions {
  double tolerance = 0.25;
  // The regularity / common-neighbor hypothesis is only meaningful for
  // single-color neighborhoods.
  bool check_hypothesis = true;
};

// Greedy partition into cliques: seed the least unassigned vertex, then add
// the unassigned common neighbor with the most neighbors among the remaining
// candidates (ties by index). Accepted iff every clique is maximal in h and
// has order >= (1 - tolerance) * lambda.
MetschResult metsch_partition(const LocalGraph& h, std::size_t lambda, std::uint64_t mu,
                              const MetschOptions& opt = {});

enum class LocalFailure { none, hypothesis, partition, uniformity };
const char* to_string(LocalFailure f);

struct LocalPartition {
  Vertex center = 0;
  std::vector<Color> colors;  // I, sorted
  LocalFailure failure = LocalFailure::none;
  std::vector<Clique> cliques;
  std::string message;
  bool ok() const { return failure == LocalFailure::none; }
};

// Partition of X_I(u) by metsch_partition, then |C cap X_i(u)| in
// [(1-t) lambda_i, (1+t) lambda_i] or 0 for every clique and i in I.
LocalPartition local_clique_partition(const Configuration& cfg, const ParameterProfile& pr,
                                      const NondominantGraph& g, Vertex u,
                                      std::span<const Color> colors, double tolerance = 0.25);

// For each clique C of the partition, whether C + {u} is maximal in G(X).
std::vector<bool> strong_partition_check(const NondominantGraph& g, Vertex u,
                                         std::span<const Clique> cliques);

struct ColorUniformity {
  Color color = 0;
  std::uint64_t lambda = 0;
  double worst_deviation = 0;  // max |count/lambda - 1| over nonzero counts
  std::uint64_t zero_count = 0;
  // Cliques through u meeting X_i(u); min and max over vertices.
  std::size_t cliques_per_vertex_min = 0;
  std::size_t cliques_per_vertex_max = 0;
};

struct CliqueGeometry {
  std::vector<Clique> cliques;                     // sorted lexicographically
  std::vector<std::vector<std::uint32_t>> incidence;  // per vertex, clique indices
  std::vector<std::vector<Color>> color_groups;    // the sets I used
  std::vector<ColorUniformity> uniformity;
  double worst_deviation = 0;
};

enum class GeometryStage { none, local_partition, strongness, symmetry, pair_uniqueness };
const char* to_string(GeometryStage s);

struct GeometryResult {
  std::optional<CliqueGeometry> geometry;
  GeometryStage stage = GeometryStage::none;
  std::string message;
  std::vector<std::vector<Color>> color_groups;
  bool ok() const { return geometry.has_value(); }
};

struct GeometryOptions {
  double tolerance = 0.25;
  std::uint64_t seed = 7;
  std::size_t samples = 32;
  // Test color-set growth at every vertex rather than a sample.
  bool exhaustive = false;
};

// Throws PreconditionError without a dominant color.
GeometryResult assemble_geometry(const Configuration& cfg, const GeometryOptions& opt = {});

struct FamilyMatch {
  std::string family;  // "triangular" or "lattice"
  std::size_t parameter = 0;
  Color edge_color = 0;  // the color playing the graph's edges
  bool complemented = false;
  // Isomorphism onto the generated family member with colors aligned.
  std::optional<std::vector<Vertex>> isomorphism;
  Tri certified = Tri::unchecked;
};

// Rank-3 matching of (n, k, lambda, mu) against T(m) and L_2(m), with an
// isomorphism search when n <= iso_limit. Colors are tried in index order.
std::vector<FamilyMatch> match_line_graph_families(const Configuration& cfg,
                                                   std::size_t iso_limit);

struct TwoCliqueClassification {
  bool all_in_two = false;
  std::size_t rank = 0;
  std::vector<FamilyMatch> matches;  // rank 3
  std::optional<bool> nondominant_paired;     // rank 4
  std::optional<bool> cliques_pairwise_meet;  // rank 4
  std::string verdict;
};

TwoCliqueClassification two_clique_characterization(const Configuration& cfg,
                                                    const CliqueGeometry& geometry,
                                                    std::size_t iso_limit = 100);

struct GoodTripleQuery {
  Color i = 0;
  Color j = 0;
  Vertex u = 0;
  Vertex v = 0;
  std::uint64_t q_count = 0;     // Property Q(i,j) quadruples at u
  std::uint64_t good_count = 0;  // triples good for (u,v)
  // Per w in X_i(u), #{x in X_j(w) : c(u,x) dominant}; constant p(i, d, j*).
  std::vector<std::uint32_t> candidates_per_w;
};

// Exact enumeration; z ranges over X_i(v).
GoodTripleQuery count_good_triples(const Configuration& cfg, const ParameterProfile& pr,
                                   Color i, Color j, Vertex u, Vertex v);

// As above with z ranging over an explicit candidate set instead of X_i(v).
GoodTripleQuery count_good_triples(const Configuration& cfg, const ParameterProfile& pr,
                                   Color i, Color j, Vertex u, Vertex v,
                                   std::span<const Vertex> z_candidates);

}  // namespace cohere

#endif  // COHERE_CLIQUES_HPP_
