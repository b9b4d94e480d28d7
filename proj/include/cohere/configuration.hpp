#ifndef COHERE_CONFIGURATION_HPP_
#define COHERE_CONFIGURATION_HPP_

#include <optional>
#include <vector>

#include "cohere/color_matrix.hpp"
#include "cohere/structure_constants.hpp"

namespace cohere {

// A coloring together with what is known about it. Immutable once built.
//
// Configuration(m) records nothing; Configuration::analyze(m) runs the axiom
// check, the coherence check, homogeneity, and (for homogeneous coherent
// input) primitivity.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(ColorMatrix m);

  static Configuration analyze(ColorMatrix m);

  const ColorMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.size(); }
  std::size_t rank() const { return matrix_.rank(); }

  bool has_constants() const { return constants_.has_value(); }
  // Throws PreconditionError unless coherence was verified.
  const StructureConstants& constants() const;

  Tri valid() const { return valid_; }
  Tri coherent() const { return coherent_; }
  Tri homogeneous() const { return homogeneous_; }
  Tri primitive() const { return primitive_; }

  const std::vector<AxiomViolation>& violations() const { return violations_; }
  const std::optional<CoherenceFailure>& coherence_failure() const { return failure_; }

  bool is_pcc() const {
    return coherent_ == Tri::yes && homogeneous_ == Tri::yes && primitive_ == Tri::yes;
  }

 private:
  ColorMatrix matrix_;
  std::optional<StructureConstants> constants_;
  Tri valid_ = Tri::unchecked;
  Tri coherent_ = Tri::unchecked;
  Tri homogeneous_ = Tri::unchecked;
  Tri primitive_ = Tri::unchecked;
  std::vector<AxiomViolation> violations_;
  std::optional<CoherenceFailure> failure_;
};

// All diagonal cells share one color.
bool is_homogeneous(const ColorMatrix& m);

struct PrimitivityResult {
  bool primitive = true;
  // On failure: the least nondiagonal color whose constituent digraph is not
  // strongly connected, and the strong component index of each vertex.
  std::optional<Color> disconnected_color;
  std::vector<std::uint32_t> components;
};

// Strong connectivity of each nondiagonal constituent digraph.
// Throws PreconditionError on non-homogeneous input.
PrimitivityResult is_primitive(const ColorMatrix& m);
PrimitivityResult is_primitive(const Configuration& cfg);

// Strong component index per vertex of the color-i constituent digraph,
// numbered by least member.
std::vector<std::uint32_t> strong_components(const ColorMatrix& m, Color i);

// Out-neighborhoods X_i(u) of the color-i constituent digraph.
class ConstituentDigraph {
 public:
  // Throws PreconditionError if i is a diagonal color or out of range.
  ConstituentDigraph(const ColorMatrix& m, Color i);

  Color color() const { return color_; }
  std::size_t size() const { return m_->size(); }
  std::vector<Vertex> out_neighbors(Vertex u) const;
  std::size_t out_degree(Vertex u) const;

 private:
  const ColorMatrix* m_;
  Color color_;
};

ConstituentDigraph constituent_digraph(const Configuration& cfg, Color i);

}  // namespace cohere

#endif  // COHERE_CONFIGURATION_HPP_
