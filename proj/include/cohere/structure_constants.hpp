#ifndef COHERE_STRUCTURE_CONSTANTS_HPP_
#define COHERE_STRUCTURE_CONSTANTS_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "cohere/color_matrix.hpp"

namespace cohere {

using VertexPair = std::pair<Vertex, Vertex>;

// ---------------------------------------------------------------------------
// Configuration axioms
// ---------------------------------------------------------------------------

enum class Axiom {
  diagonal_separation,  // c(u,u) != c(v,w) whenever v != w
  pairing,              // c(u,v) = i  <=>  c(v,u) = i*
};

struct AxiomViolation {
  Axiom axiom;
  Color color;
  // diagonal_separation: first = (u,u), second = (v,w) with v != w.
  // pairing: first fixes i* = c(first.second, first.first); second is a pair
  // of the same color whose reverse has a different color.
  VertexPair first;
  VertexPair second;

  std::string describe() const;
};

struct ValidationResult {
  std::vector<AxiomViolation> violations;  // at most one per (axiom, color)
  bool ok() const { return violations.empty(); }
};

ValidationResult validate_configuration(const ColorMatrix& m);

// Color pairing i -> i*, read from the first occurrence of each color.
// Meaningful only for matrices passing validate_configuration.
std::vector<Color> color_pairing(const ColorMatrix& m);

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

// The tensor p(i,j,k) = #{w : c(u,w) = j, c(w,v) = k} for any (u,v) of
// color i. Stored sparsely per color i as (j, k, count) entries sorted by
// (j, k), so discrete configurations with r = n^2 stay O(n^3).
class StructureConstants {
 public:
  struct Entry {
    Color j;
    Color k;
    std::uint32_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  StructureConstants() = default;
  StructureConstants(std::size_t rank, std::vector<std::uint32_t> degrees,
                     std::vector<Color> pairing, std::vector<std::uint8_t> diagonal,
                     std::vector<VertexPair> representatives,
                     std::vector<std::vector<Entry>> entries);

  std::size_t rank() const { return rank_; }

  // p^i_{jk}
  std::uint32_t operator()(Color i, Color j, Color k) const;

  // n_i: out-degree in the color-i constituent digraph.
  std::uint32_t degree(Color i) const { return degrees_[i]; }
  std::span<const std::uint32_t> degrees() const { return degrees_; }

  Color pair_of(Color i) const { return pairing_[i]; }
  std::span<const Color> pairing() const { return pairing_; }

  bool is_diagonal(Color i) const { return diagonal_[i] != 0; }

  // Nonzero entries of color i, sorted by (j, k).
  std::span<const Entry> entries(Color i) const { return entries_[i]; }

  // The pair that was counted for color i.
  VertexPair representative(Color i) const { return representatives_[i]; }

  // Dense r x r slice P_i with P_i(j,k) = p^i_{jk}.
  Eigen::MatrixXi slice(Color i) const;

 private:
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> degrees_;
  std::vector<Color> pairing_;
  std::vector<std::uint8_t> diagonal_;
  std::vector<VertexPair> representatives_;
  std::vector<std::vector<Entry>> entries_;
};

// Two pairs of color i whose (j,k) path counts differ.
struct CoherenceFailure {
  Color i;
  Color j;
  Color k;
  VertexPair representative;
  std::uint32_t representative_count;
  VertexPair witness;
  std::uint32_t witness_count;

  std::string describe() const;
};

using CoherenceResult = std::variant<StructureConstants, CoherenceFailure>;

// Counts the representative of every color and verifies every other pair of
// that color against it. The reported failure is the row-major first failing
// pair, with the lexicographically least differing (j,k).
// Precondition: validate_configuration(m).ok().
CoherenceResult compute_structure_constants(const ColorMatrix& m);

// Exact checks of the standard identities over all color triples:
//   n_i = n_{i*};  p(i,j,k) = p(i*,k*,j*);  n_i p(i,j,k) = n_j p(j,i,k*);
//   sum_j p(i,j,k) = n_k.
// Returns a description of each violated instance (empty when all hold).
// The identities assume homogeneity.
std::vector<std::string> check_structure_identities(const StructureConstants& p);

}  // namespace cohere

#endif  // COHERE_STRUCTURE_CONSTANTS_HPP_
