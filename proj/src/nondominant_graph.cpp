#include <string>

#include "cohere/cliques.hpp"
#include "cohere/parallel.hpp"

namespace cohere {

NondominantGraph::NondominantGraph(const Configuration& cfg, const ParameterProfile& pr) {
  if (!pr.dominant)
    throw PreconditionError("the nondominant graph needs a dominant color");
  const std::size_t n = cfg.size();
  const auto& m = cfg.matrix();
  adj_.assign(n, Bitset(n));
  lists_.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    auto row = m.row(u);
    for (Vertex v = 0; v < n; ++v)
      if (pr.nondominant(row[v])) {
        adj_[u].set(v);
        lists_[u].push_back(v);
      }
  }
  valency_ = lists_[0].size();
  mu_ = *pr.mu;

  std::vector<std::string> errors(n);
  parallel_for(0, n, [&](std::size_t u) {
    if (lists_[u].size() != valency_) {
      errors[u] = "vertex " + std::to_string(u) + " has valency " +
                  std::to_string(lists_[u].size());
      return;
    }
    if (lists_[u].size() != pr.rho) {
      errors[u] = "valency differs from rho";
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || adj_[u][v])
        continue;
      if ((adj_[u] & adj_[v]).count() != mu_) {
        errors[u] = "nonadjacent pair (" + std::to_string(u) + "," + std::to_string(v) +
                    ") does not have mu common neighbors";
        return;
      }
    }
  });
  for (auto& e : errors)
    if (!e.empty())
      throw InvariantError(e);
}

NondominantGraph nondominant_graph(const Configuration& cfg, const ParameterProfile& pr) {
  return NondominantGraph(cfg, pr);
}

LocalGraph LocalGraph::induced(const NondominantGraph& g, std::vector<Vertex> vertices) {
  LocalGraph h;
  h.vertices = std::move(vertices);
  const std::size_t k = h.vertices.size();
  h.adj.assign(k, Bitset(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.adjacent(h.vertices[a], h.vertices[b])) {
        h.adj[a].set(b);
        h.adj[b].set(a);
      }
  return h;
}

LocalGraph LocalGraph::from_edges(std::size_t k, std::span<const std::pair<Vertex, Vertex>> edges) {
  LocalGraph h;
  h.vertices.resize(k);
  for (std::size_t a = 0; a < k; ++a)
    h.vertices[a] = static_cast<Vertex>(a);
  h.adj.assign(k, Bitset(k));
  for (auto [a, b] : edges) {
    if (a >= k || b >= k || a == b)
      throw PreconditionError("bad local edge");
    h.adj[a].set(b);
    h.adj[b].set(a);
  }
  return h;
}

}  // namespace cohere
