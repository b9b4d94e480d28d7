#include <algorithm>
#include <cmath>
#include <string>

#include "cohere/cliques.hpp"
#include "cohere/parallel.hpp"

namespace cohere {
namespace {

// Local partitions of one color group at every vertex in `at`; returns the
// index of the first failure or at.size().
std::size_t first_failure(const Configuration& cfg, const ParameterProfile& pr,
                          const NondominantGraph& g, std::span<const Color> group,
                          std::span<const Vertex> at, double tolerance, std::string* message) {
  std::vector<std::string> fails(at.size());
  parallel_for(0, at.size(), [&](std::size_t s) {
    auto lp = local_clique_partition(cfg, pr, g, at[s], group, tolerance);
    if (!lp.ok())
      fails[s] = std::string(to_string(lp.failure)) + " at vertex " + std::to_string(at[s]) +
                 ": " + lp.message;
  });
  for (std::size_t s = 0; s < at.size(); ++s)
    if (!fails[s].empty()) {
      if (message)
        *message = fails[s];
      return s;
    }
  return at.size();
}

std::string colors_string(std::span<const Color> colors) {
  std::string s = "{";
  for (std::size_t a = 0; a < colors.size(); ++a)
    s += (a ? "," : "") + std::to_string(colors[a]);
  return s + "}";
}

}  // namespace

const char* to_string(GeometryStage s) {
  switch (s) {
    case GeometryStage::none: return "none";
    case GeometryStage::local_partition: return "local_partition";
    case GeometryStage::strongness: return "strongness";
    case GeometryStage::symmetry: return "symmetry";
    default: return "pair_uniqueness";
  }
}

GeometryResult assemble_geometry(const Configuration& cfg, const GeometryOptions& opt) {
  ParameterProfile pr = profile(cfg);
  if (!pr.dominant)
    throw PreconditionError("clique geometry needs a dominant color");
  NondominantGraph g(cfg, pr);
  const std::size_t n = cfg.size();
  const auto& m = cfg.matrix();
  GeometryResult res;

  std::vector<Color> order;
  for (std::size_t c = 0; c < pr.r; ++c)
    if (pr.nondominant(static_cast<Color>(c)))
      order.push_back(static_cast<Color>(c));
  std::stable_sort(order.begin(), order.end(),
                   [&](Color a, Color b) { return pr.degrees[a] < pr.degrees[b]; });

  std::vector<Vertex> all(n);
  for (std::size_t u = 0; u < n; ++u)
    all[u] = static_cast<Vertex>(u);
  std::vector<Vertex> probe =
      opt.exhaustive ? all
                     : sample_vertices(n, SamplingOptions{opt.seed, opt.samples, opt.samples},
                                       0x67656f6dULL);

  // Grow color groups greedily in increasing degree order.
  std::vector<std::uint8_t> grouped(pr.r, 0);
  for (std::size_t a = 0; a < order.size(); ++a) {
    Color i = order[a];
    if (grouped[i])
      continue;
    std::vector<Color> group{i};
    std::string message;
    if (first_failure(cfg, pr, g, group, probe, opt.tolerance, &message) != probe.size()) {
      res.stage = GeometryStage::local_partition;
      res.message = "color " + std::to_string(i) + ": " + message;
      res.color_groups.push_back(group);
      return res;
    }
    grouped[i] = 1;
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      Color j = order[b];
      if (grouped[j])
        continue;
      group.push_back(j);
      if (first_failure(cfg, pr, g, group, probe, opt.tolerance, nullptr) == probe.size())
        grouped[j] = 1;
      else
        group.pop_back();
    }
    std::sort(group.begin(), group.end());
    res.color_groups.push_back(group);
  }

  // K(u,v) for every nondominant pair: index into cliques_at[u].
  std::vector<std::vector<Clique>> cliques_at(n);
  std::vector<std::vector<std::uint32_t>> clique_of(n, std::vector<std::uint32_t>(n, ~0u));
  std::vector<std::string> fails(n);
  std::vector<GeometryStage> fail_stage(n, GeometryStage::none);
  parallel_for(0, n, [&](std::size_t uu) {
    Vertex u = static_cast<Vertex>(uu);
    for (const auto& group : res.color_groups) {
      auto lp = local_clique_partition(cfg, pr, g, u, group, opt.tolerance);
      if (!lp.ok()) {
        fail_stage[u] = GeometryStage::local_partition;
        fails[u] = "group " + colors_string(group) + " at vertex " + std::to_string(u) + ": " +
                   lp.message;
        return;
      }
      auto strong = strong_partition_check(g, u, lp.cliques);
      for (std::size_t c = 0; c < lp.cliques.size(); ++c) {
        if (!strong[c]) {
          fail_stage[u] = GeometryStage::strongness;
          fails[u] = "group " + colors_string(group) + " at vertex " + std::to_string(u) +
                     ": clique plus center is not maximal";
          return;
        }
        Clique k = lp.cliques[c];
        for (Vertex v : k)
          clique_of[u][v] = static_cast<std::uint32_t>(cliques_at[u].size());
        k.insert(std::lower_bound(k.begin(), k.end(), u), u);
        cliques_at[u].push_back(std::move(k));
      }
    }
  });
  for (std::size_t u = 0; u < n; ++u)
    if (fail_stage[u] != GeometryStage::none) {
      res.stage = fail_stage[u];
      res.message = fails[u];
      return res;
    }

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbor_list(u)) {
      if (v < u)
        continue;
      const Clique& a = cliques_at[u][clique_of[u][v]];
      const Clique& b = cliques_at[v][clique_of[v][u]];
      if (a != b) {
        res.stage = GeometryStage::symmetry;
        res.message = "K(" + std::to_string(u) + "," + std::to_string(v) + ") != K(" +
                      std::to_string(v) + "," + std::to_string(u) + ")";
        return res;
      }
    }

  CliqueGeometry geo;
  geo.color_groups = res.color_groups;
  for (auto& list : cliques_at)
    for (auto& k : list)
      geo.cliques.push_back(k);
  std::sort(geo.cliques.begin(), geo.cliques.end());
  geo.cliques.erase(std::unique(geo.cliques.begin(), geo.cliques.end()), geo.cliques.end());

  std::vector<std::uint32_t> cover(n * n, 0);
  for (const auto& k : geo.cliques)
    for (std::size_t a = 0; a < k.size(); ++a)
      for (std::size_t b = a + 1; b < k.size(); ++b) {
        if (!g.adjacent(k[a], k[b])) {
          res.stage = GeometryStage::pair_uniqueness;
          res.message = "clique contains the nonadjacent pair (" + std::to_string(k[a]) + "," +
                        std::to_string(k[b]) + ")";
          return res;
        }
        ++cover[k[a] * n + k[b]];
      }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbor_list(u))
      if (u < v && cover[u * n + v] != 1) {
        res.stage = GeometryStage::pair_uniqueness;
        res.message = "pair (" + std::to_string(u) + "," + std::to_string(v) + ") lies in " +
                      std::to_string(cover[u * n + v]) + " cliques";
        return res;
      }

  geo.incidence.assign(n, {});
  for (std::size_t c = 0; c < geo.cliques.size(); ++c)
    for (Vertex v : geo.cliques[c])
      geo.incidence[v].push_back(static_cast<std::uint32_t>(c));

  for (Color i : order) {
    ColorUniformity cu;
    cu.color = i;
    cu.lambda = *pr.lambda[i];
    std::size_t lo = ~std::size_t{0}, hi = 0;
    for (Vertex u = 0; u < n; ++u) {
      std::size_t meeting = 0;
      for (auto c : geo.incidence[u]) {
        std::size_t count = 0;
        for (Vertex v : geo.cliques[c])
          count += (v != u && m(u, v) == i) ? 1 : 0;
        if (count == 0) {
          ++cu.zero_count;
          continue;
        }
        ++meeting;
        double dev = cu.lambda == 0 ? static_cast<double>(count)
                                    : std::abs(static_cast<double>(count) / cu.lambda - 1.0);
        cu.worst_deviation = std::max(cu.worst_deviation, dev);
      }
      lo = std::min(lo, meeting);
      hi = std::max(hi, meeting);
    }
    cu.cliques_per_vertex_min = lo;
    cu.cliques_per_vertex_max = hi;
    geo.worst_deviation = std::max(geo.worst_deviation, cu.worst_deviation);
    geo.uniformity.push_back(cu);
  }
  std::sort(geo.uniformity.begin(), geo.uniformity.end(),
            [](const ColorUniformity& a, const ColorUniformity& b) { return a.color < b.color; });
  res.geometry = std::move(geo);
  return res;
}

}  // namespace cohere
