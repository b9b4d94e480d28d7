#ifndef COHERE_NEIGHBORHOODS_HPP_
#define COHERE_NEIGHBORHOODS_HPP_

#include <span>
#include <vector>

#include "cohere/color_matrix.hpp"

namespace cohere {

// X_i(u) for every vertex and color, as sorted vertex lists in one flat array.
class ColorNeighborhoods {
 public:
  explicit ColorNeighborhoods(const ColorMatrix& m);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return r_; }

  std::span<const Vertex> operator()(Vertex u, Color i) const {
    const std::size_t slot = static_cast<std::size_t>(u) * r_ + i;
    return {flat_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
  }

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> flat_;
};

}  // namespace cohere

#endif  // COHERE_NEIGHBORHOODS_HPP_
