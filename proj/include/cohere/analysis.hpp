#ifndef COHERE_ANALYSIS_HPP_
#define COHERE_ANALYSIS_HPP_

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohere/configuration.hpp"

namespace cohere {

// Per-configuration parameters. Colors keep their original indices; the
// normalized numbering (diagonal 0, the max-degree color 1, the rest in
// original order) is recorded in `renumbering`.
struct ParameterProfile {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::uint32_t> degrees;
  std::vector<Color> pairing;
  Color diagonal = 0;
  // Max-degree color, least index on ties.
  Color max_color = 0;
  std::vector<Color> renumbering;  // original -> normalized
  std::uint64_t rho = 0;
  std::optional<Color> dominant;
  // 2 n_i = n exactly for the dominant color.
  bool dominant_boundary = false;
  bool dominant_symmetric = true;
  std::optional<std::uint64_t> mu;
  // Indexed by color; set for nondominant nondiagonal colors when a dominant
  // color exists.
  std::vector<std::optional<std::uint64_t>> lambda;
  // D(i) by color; 0 for the diagonal color.
  std::vector<std::uint64_t> distinguishing;
  Tri primitive = Tri::unchecked;

  bool nondominant(Color i) const { return i != diagonal && (!dominant || *dominant != i); }
};

// Throws PreconditionError unless the configuration is coherent, homogeneous
// and of rank > 2.
ParameterProfile profile(const Configuration& cfg);

// D(i) = sum over j != k of p(i, j, k*). Throws on a diagonal color.
std::uint64_t distinguishing_number(const Configuration& cfg, Color i);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct SphereTable {
  Color color = 0;
  Vertex source = 0;
  std::vector<std::vector<Vertex>> spheres;  // spheres[d] = vertices at distance d
  std::vector<std::uint32_t> distance;       // per vertex, kUnreachable if none
  // dist_i(j) read from this source; kUnreachable where the color does not
  // occur in the row or is unreachable.
  std::vector<std::uint32_t> color_distance;
  bool complete = true;  // every vertex reachable
};

// BFS layers of X_i from u. Throws InvariantError if two vertices of the same
// color relative to u lie at different distances.
SphereTable spheres(const Configuration& cfg, Color i, Vertex u);

struct SamplingOptions {
  std::uint64_t seed = 7;
  std::size_t exhaustive_limit = 500;
  std::size_t samples = 32;
};

// All vertices when n <= exhaustive_limit, else `samples` distinct vertices
// drawn from the seeded stream, sorted.
std::vector<Vertex> sample_vertices(std::size_t n, const SamplingOptions& opt,
                                    std::uint64_t stream);

// dist_i(j) for every color j, checked across the sampled sources. Throws
// InvariantError when two pairs of one color disagree.
std::vector<std::uint32_t> color_distances(const Configuration& cfg, Color i,
                                           const SamplingOptions& opt = {});

enum class CheckStatus { passed, failed, inconclusive, skipped };
const char* to_string(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::uint64_t instances = 0;
  std::vector<std::string> witnesses;  // at most kMaxWitnesses
  std::string note;
  std::vector<std::pair<std::string, double>> metrics;

  static constexpr std::size_t kMaxWitnesses = 16;
  void fail(std::string witness);
};

struct VerificationReport {
  std::vector<CheckOutcome> checks;
  bool ok() const;
  std::size_t violations() const;
};

// Growth of spheres: for nondiagonal i, j with delta = dist_i(j) >= 3 and
// 1 <= alpha <= delta - 2, |S_{alpha+1}(u)| |S_{delta-alpha}(u)| >= n_i n_j.
VerificationReport check_growth_of_spheres(const Configuration& cfg,
                                           const SamplingOptions& opt = {});

// Reports the quadrant (hypothesis rho < (1-eps) n^{2/3}, conclusion
// dist_i(dominant) = 2 and n_i^2 >= n-1 for nondominant i). Never fails.
VerificationReport check_diameter_lemma(const Configuration& cfg, double epsilon = 0.1,
                                        const SamplingOptions& opt = {});

// Structure-constant identities and the distinguishing-number inequalities.
VerificationReport check_identities(const Configuration& cfg, const SamplingOptions& opt = {});

}  // namespace cohere

#endif  // COHERE_ANALYSIS_HPP_
