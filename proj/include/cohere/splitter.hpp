#ifndef COHERE_SPLITTER_HPP_
#define COHERE_SPLITTER_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohere/cliques.hpp"
#include "cohere/refinement.hpp"

namespace cohere {

enum class ExceptionalKind { none, complete, triangular, lattice };
const char* to_string(ExceptionalKind k);

struct ExceptionalMatch {
  ExceptionalKind kind = ExceptionalKind::none;
  std::size_t parameter = 0;  // m, or n for the complete graph
  bool complemented = false;
  Tri certified = Tri::unchecked;
  std::optional<std::vector<Vertex>> isomorphism;
  std::string note;

  std::string describe() const;
};

// Rank 2 is complete; rank 3 is matched against T(m) and L_2(m) and, for
// n <= iso_limit, certified by an explicit isomorphism. A parameter match
// whose search fails is rejected with a "pseudo-" note.
ExceptionalMatch recognize_exceptional(const Configuration& cfg, std::size_t iso_limit = 300);

struct SplitOptions {
  std::uint64_t seed = 42;
  double beta = 8.0;
  std::size_t rounds = 8;            // escalation levels
  std::size_t attempts_per_level = 8;
  double tolerance = 0.25;
};

struct SplitAttempt {
  std::string strategy;
  std::size_t index = 0;
  double parameter = 0;  // sample size factor, beta, or rate
  std::size_t set_size = 0;
  std::size_t classes = 0;
  bool splits = false;
};

enum class SplitOutcome { split, exceptional, exhausted };
const char* to_string(SplitOutcome o);

struct SplitReport {
  std::string strategy;
  SplitOutcome outcome = SplitOutcome::exhausted;
  std::vector<Vertex> set;  // sorted
  bool splits = false;
  std::size_t final_classes = 0;
  RefinementTrace trace;
  boost::multiprecision::cpp_int bound;  // n^|S| when splitting
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  std::vector<SplitAttempt> log;
  std::vector<std::string> decisions;
  std::optional<ExceptionalMatch> exceptional;
  std::vector<std::pair<std::string, double>> metrics;
};

// Random sets of size ceil(c n ln n / zeta), c = 1, 2, 4, ..., plus a greedy
// set; the smaller successful one is reported.
SplitReport split_by_distinguishing(const Configuration& cfg, const SplitOptions& opt = {});

// Each vertex independently with probability min(1, beta sqrt(ln n / n^1.5)),
// beta doubling on failure.
SplitReport split_by_good_triples(const Configuration& cfg, Color i, Color j,
                                  const SplitOptions& opt = {});

// Samples inside the two largest cliques at rate 6 ln(k^2)/k, k = |C| - 1.
// Throws PreconditionError unless every vertex lies in exactly two cliques.
SplitReport split_two_clique(const Configuration& cfg, const CliqueGeometry& geometry,
                             const SplitOptions& opt = {});

SplitReport auto_split(const Configuration& cfg, const SplitOptions& opt = {});

}  // namespace cohere

#endif  // COHERE_SPLITTER_HPP_
