#include "cohere/neighborhoods.hpp"

namespace cohere {

ColorNeighborhoods::ColorNeighborhoods(const ColorMatrix& m) : n_(m.size()), r_(m.rank()) {
  offsets_.assign(n_ * r_ + 1, 0);
  for (Vertex u = 0; u < n_; ++u)
    for (Color c : m.row(u))
      ++offsets_[static_cast<std::size_t>(u) * r_ + c + 1];
  for (std::size_t s = 1; s < offsets_.size(); ++s)
    offsets_[s] += offsets_[s - 1];
  flat_.resize(n_ * n_);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (Vertex u = 0; u < n_; ++u) {
    auto row = m.row(u);
    for (Vertex v = 0; v < n_; ++v)
      flat_[fill[static_cast<std::size_t>(u) * r_ + row[v]]++] = v;
  }
}

}  // namespace cohere
