#include "cohere/cliques.hpp"
#include "cohere/neighborhoods.hpp"

namespace cohere {
namespace {

void require_query(const Configuration& cfg, const ParameterProfile& pr, Color i, Color j,
                   Vertex u, Vertex v) {
  if (!pr.dominant)
    throw PreconditionError("good triples need a dominant color");
  if (i >= pr.r || j >= pr.r || !pr.nondominant(i) || !pr.nondominant(j))
    throw PreconditionError("good triples need nondominant colors i and j");
  if (u >= cfg.size() || v >= cfg.size())
    throw PreconditionError("vertex out of range");
}

}  // namespace

GoodTripleQuery count_good_triples(const Configuration& cfg, const ParameterProfile& pr,
                                   Color i, Color j, Vertex u, Vertex v,
                                   std::span<const Vertex> z_candidates) {
  require_query(cfg, pr, i, j, u, v);
  const auto& m = cfg.matrix();
  const std::size_t n = cfg.size();
  const Color d = *pr.dominant;
  ColorNeighborhoods nb(m);

  Bitset z_set(n);
  for (Vertex z : z_candidates)
    z_set.set(z);
  // into_j[x] = {z : c(z,x) = j}
  std::vector<Bitset> into_j(n, Bitset(n));
  for (Vertex z = 0; z < n; ++z)
    for (Vertex x : nb(z, j))
      into_j[x].set(z);

  GoodTripleQuery q;
  q.i = i;
  q.j = j;
  q.u = u;
  q.v = v;
  std::vector<Vertex> cand;
  for (Vertex w : nb(u, i)) {
    cand.clear();
    for (Vertex x : nb(w, j))
      if (m(u, x) == d)
        cand.push_back(x);
    q.candidates_per_w.push_back(static_cast<std::uint32_t>(cand.size()));
    for (Vertex x : cand) {
      Bitset zx = into_j[x] & z_set;
      const bool vx = m(v, x) == d;
      for (Vertex y : cand) {
        if (m(x, y) != d)
          continue;
        ++q.q_count;
        bool witnessed = vx && m(v, y) == d && zx.intersects(into_j[y]);
        if (!witnessed)
          ++q.good_count;
      }
    }
  }
  return q;
}

GoodTripleQuery count_good_triples(const Configuration& cfg, const ParameterProfile& pr,
                                   Color i, Color j, Vertex u, Vertex v) {
  require_query(cfg, pr, i, j, u, v);
  ColorNeighborhoods nb(cfg.matrix());
  auto zs = nb(v, i);
  std::vector<Vertex> z(zs.begin(), zs.end());
  return count_good_triples(cfg, pr, i, j, u, v, z);
}

}  // namespace cohere
