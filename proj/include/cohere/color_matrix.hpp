#ifndef COHERE_COLOR_MATRIX_HPP_
#define COHERE_COLOR_MATRIX_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "cohere/types.hpp"

namespace cohere {

// Dense coloring c : V x V -> {0..r-1}, stored row-major.
//
// The constructor enforces well-formedness only: square, n >= 1, and every
// color in [0, r-1] used at least once. The configuration axioms are checked
// separately by validate_configuration().
class ColorMatrix {
 public:
  using Storage = Eigen::Matrix<Color, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  ColorMatrix() = default;
  explicit ColorMatrix(Storage cells);

  // Builds from nested rows of integer colors. Throws PreconditionError on
  // ragged input, negative or oversized colors, or sparse color indices.
  static ColorMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return static_cast<std::size_t>(cells_.rows()); }
  std::size_t rank() const { return rank_; }

  Color operator()(Vertex u, Vertex v) const { return cells_(u, v); }

  std::span<const Color> row(Vertex u) const {
    return {cells_.data() + static_cast<std::size_t>(u) * size(), size()};
  }
  std::span<const Color> flat() const { return {cells_.data(), size() * size()}; }

  const Storage& cells() const { return cells_; }

  bool is_diagonal_color(Color c) const { return diagonal_[c] != 0; }
  std::size_t diagonal_color_count() const;

  friend bool operator==(const ColorMatrix& a, const ColorMatrix& b) {
    return a.cells_.rows() == b.cells_.rows() && a.cells_ == b.cells_;
  }

 private:
  Storage cells_;
  std::size_t rank_ = 0;
  std::vector<std::uint8_t> diagonal_;
};

// Relabels colors in the canonical order: diagonal colors first, then each
// group by first occurrence in a row-major scan.
ColorMatrix canonical_renumbering(const ColorMatrix& m);

// Applies a color map old -> new. The image must be dense.
ColorMatrix recolor(const ColorMatrix& m, std::span<const Color> color_map);

// Result(perm[u], perm[v]) = m(u, v).
ColorMatrix permute_vertices(const ColorMatrix& m, std::span<const Vertex> perm);

// Transpose with every color replaced by its pair i -> i*. For a valid
// configuration the result equals the input.
ColorMatrix paired_transpose(const ColorMatrix& m, std::span<const Color> pairing);

// Per-color incidence matrix A_i with A_i(u,v) = [c(u,v) = i].
Eigen::MatrixXi adjacency_matrix(const ColorMatrix& m, Color i);

}  // namespace cohere

#endif  // COHERE_COLOR_MATRIX_HPP_
