#include <algorithm>
#include <set>
#include <string>

#include "cohere/analysis.hpp"
#include "cohere/neighborhoods.hpp"
#include "cohere/parallel.hpp"
#include "cohere/rng.hpp"
#include "spheres_internal.hpp"

namespace cohere {

std::vector<std::uint32_t> bfs_distances(const ColorNeighborhoods& nb, Color i, Vertex u) {
  std::vector<std::uint32_t> dist(nb.size(), kUnreachable);
  std::vector<Vertex> frontier{u};
  dist[u] = 0;
  for (std::uint32_t d = 1; !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (Vertex y : nb(x, i))
        if (dist[y] == kUnreachable) {
          dist[y] = d;
          next.push_back(y);
        }
    frontier = std::move(next);
  }
  return dist;
}

std::vector<std::uint32_t> distances_by_color(const ColorMatrix& m,
                                              const std::vector<std::uint32_t>& dist, Vertex u,
                                              Color i, std::string* conflict) {
  std::vector<std::uint32_t> by_color(m.rank(), kUnreachable);
  std::vector<std::uint8_t> seen(m.rank(), 0);
  auto row = m.row(u);
  for (Vertex v = 0; v < m.size(); ++v) {
    Color j = row[v];
    if (!seen[j]) {
      seen[j] = 1;
      by_color[j] = dist[v];
    } else if (by_color[j] != dist[v] && conflict && conflict->empty()) {
      *conflict = "color " + std::to_string(i) + ": pairs of color " + std::to_string(j) +
                  " from source " + std::to_string(u) + " lie at different distances";
    }
  }
  return by_color;
}

void require_color(const Configuration& cfg, Color i) {
  if (i >= cfg.rank())
    throw PreconditionError("color out of range");
  if (cfg.matrix().is_diagonal_color(i))
    throw PreconditionError("spheres of a diagonal color requested");
}

SphereTable spheres(const Configuration& cfg, Color i, Vertex u) {
  require_color(cfg, i);
  if (u >= cfg.size())
    throw PreconditionError("source vertex out of range");
  ColorNeighborhoods nb(cfg.matrix());
  SphereTable t;
  t.color = i;
  t.source = u;
  t.distance = bfs_distances(nb, i, u);
  for (Vertex v = 0; v < cfg.size(); ++v) {
    std::uint32_t d = t.distance[v];
    if (d == kUnreachable) {
      t.complete = false;
      continue;
    }
    if (d >= t.spheres.size())
      t.spheres.resize(d + 1);
    t.spheres[d].push_back(v);
  }
  std::string conflict;
  t.color_distance = distances_by_color(cfg.matrix(), t.distance, u, i, &conflict);
  if (!conflict.empty())
    throw InvariantError(conflict);
  return t;
}

std::vector<Vertex> sample_vertices(std::size_t n, const SamplingOptions& opt,
                                    std::uint64_t stream) {
  std::vector<Vertex> out;
  if (n <= opt.exhaustive_limit || opt.samples >= n) {
    out.resize(n);
    for (std::size_t u = 0; u < n; ++u)
      out[u] = static_cast<Vertex>(u);
    return out;
  }
  CounterRng rng(opt.seed, stream);
  std::set<Vertex> picked;
  while (picked.size() < opt.samples)
    picked.insert(static_cast<Vertex>(rng.below(n)));
  return {picked.begin(), picked.end()};
}

std::vector<std::uint32_t> color_distances(const Configuration& cfg, Color i,
                                           const SamplingOptions& opt) {
  require_color(cfg, i);
  ColorNeighborhoods nb(cfg.matrix());
  auto sources = sample_vertices(cfg.size(), opt, 0x64697374ULL + i);
  std::vector<std::vector<std::uint32_t>> rows(sources.size());
  std::vector<std::string> conflicts(sources.size());
  parallel_for(0, sources.size(), [&](std::size_t s) {
    auto dist = bfs_distances(nb, i, sources[s]);
    rows[s] = distances_by_color(cfg.matrix(), dist, sources[s], i, &conflicts[s]);
  });
  for (const auto& c : conflicts)
    if (!c.empty())
      throw InvariantError(c);
  // Colors absent from a row (possible only without homogeneity) are skipped.
  std::vector<std::uint32_t> out(cfg.rank(), kUnreachable);
  std::vector<std::uint8_t> set(cfg.rank(), 0);
  for (std::size_t s = 0; s < sources.size(); ++s) {
    auto row = cfg.matrix().row(sources[s]);
    std::vector<std::uint8_t> present(cfg.rank(), 0);
    for (Color c : row)
      present[c] = 1;
    for (std::size_t j = 0; j < cfg.rank(); ++j) {
      if (!present[j])
        continue;
      if (!set[j]) {
        set[j] = 1;
        out[j] = rows[s][j];
      } else if (out[j] != rows[s][j]) {
        throw InvariantError("color " + std::to_string(i) + ": dist to color " +
                             std::to_string(j) + " differs between sources");
      }
    }
  }
  return out;
}

}  // namespace cohere
