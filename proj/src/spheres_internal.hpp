#ifndef COHERE_SRC_SPHERES_INTERNAL_HPP_
#define COHERE_SRC_SPHERES_INTERNAL_HPP_

#include <string>
#include <vector>

#include "cohere/configuration.hpp"
#include "cohere/neighborhoods.hpp"

namespace cohere {

std::vector<std::uint32_t> bfs_distances(const ColorNeighborhoods& nb, Color i, Vertex u);

// dist from u to the vertices of each color class of u's row; the first
// disagreement inside the row is written to *conflict.
std::vector<std::uint32_t> distances_by_color(const ColorMatrix& m,
                                              const std::vector<std::uint32_t>& dist, Vertex u,
                                              Color i, std::string* conflict);

void require_color(const Configuration& cfg, Color i);

}  // namespace cohere

#endif  // COHERE_SRC_SPHERES_INTERNAL_HPP_
