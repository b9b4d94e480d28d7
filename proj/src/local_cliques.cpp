#include <algorithm>
#include <string>

#include "cohere/cliques.hpp"

namespace cohere {

const char* to_string(MetschStatus s) {
  switch (s) {
    case MetschStatus::ok: return "ok";
    case MetschStatus::hypothesis_failed: return "hypothesis_failed";
    default: return "partition_failed";
  }
}

const char* to_string(LocalFailure f) {
  switch (f) {
    case LocalFailure::none: return "none";
    case LocalFailure::hypothesis: return "hypothesis";
    case LocalFailure::partition: return "partition";
    default: return "uniformity";
  }
}

MetschResult metsch_partition(const LocalGraph& h, std::size_t lambda, std::uint64_t mu,
                              const MetschOptions& opt) {
  const std::size_t k = h.size();
  MetschResult res;
  if (opt.check_hypothesis) {
    for (std::size_t a = 0; a < k; ++a) {
      if (h.adj[a].count() != lambda) {
        res.status = MetschStatus::hypothesis_failed;
        res.message = "vertex " + std::to_string(h.vertices[a]) + " has degree " +
                      std::to_string(h.adj[a].count()) + ", expected " + std::to_string(lambda);
        return res;
      }
      for (std::size_t b = a + 1; b < k; ++b)
        if (!h.adj[a][b] && (h.adj[a] & h.adj[b]).count() > mu) {
          res.status = MetschStatus::hypothesis_failed;
          res.message = "nonadjacent pair (" + std::to_string(h.vertices[a]) + "," +
                        std::to_string(h.vertices[b]) + ") has more than mu common neighbors";
          return res;
        }
    }
  }

  Bitset assigned(k);
  std::vector<std::vector<std::size_t>> local;
  for (std::size_t seed = 0; seed < k; ++seed) {
    if (assigned[seed])
      continue;
    std::vector<std::size_t> clique{seed};
    assigned.set(seed);
    Bitset cand = h.adj[seed] - assigned;
    while (cand.any()) {
      std::size_t best = Bitset::npos, best_score = 0;
      for (auto c = cand.find_first(); c != Bitset::npos; c = cand.find_next(c)) {
        std::size_t score = (h.adj[c] & cand).count();
        if (best == Bitset::npos || score > best_score) {
          best = c;
          best_score = score;
        }
      }
      clique.push_back(best);
      assigned.set(best);
      cand &= h.adj[best];
      cand.reset(best);
    }
    local.push_back(std::move(clique));
  }

  const double min_order = (1.0 - opt.tolerance) * static_cast<double>(lambda);
  for (const auto& clique : local) {
    Clique global;
    for (auto a : clique)
      global.push_back(h.vertices[a]);
    std::sort(global.begin(), global.end());
    res.cliques.push_back(global);
    if (res.status != MetschStatus::ok)
      continue;
    Bitset common(k);
    common.set();
    for (auto a : clique)
      common &= h.adj[a];
    if (common.any()) {
      res.status = MetschStatus::partition_failed;
      res.offending = global;
      res.message = "clique is not maximal in the local graph";
    } else if (static_cast<double>(clique.size()) < min_order) {
      res.status = MetschStatus::partition_failed;
      res.offending = global;
      res.message = "clique of order " + std::to_string(clique.size()) + " below " +
                    std::to_string(min_order);
    }
  }
  return res;
}

LocalPartition local_clique_partition(const Configuration& cfg, const ParameterProfile& pr,
                                      const NondominantGraph& g, Vertex u,
                                      std::span<const Color> colors, double tolerance) {
  if (colors.empty())
    throw PreconditionError("local clique partition needs a nonempty color set");
  LocalPartition out;
  out.center = u;
  out.colors.assign(colors.begin(), colors.end());
  std::sort(out.colors.begin(), out.colors.end());
  out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
  std::vector<std::uint8_t> in_set(pr.r, 0);
  std::size_t lambda = 0;
  for (Color i : out.colors) {
    if (i >= pr.r || !pr.nondominant(i))
      throw PreconditionError("local clique partition needs nondominant colors");
    in_set[i] = 1;
    lambda += *pr.lambda[i];
  }

  auto row = cfg.matrix().row(u);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < cfg.size(); ++v)
    if (in_set[row[v]])
      members.push_back(v);

  LocalGraph h = LocalGraph::induced(g, members);
  MetschOptions mo;
  mo.tolerance = tolerance;
  mo.check_hypothesis = out.colors.size() == 1;
  MetschResult mr = metsch_partition(h, lambda, g.mu(), mo);
  out.cliques = std::move(mr.cliques);
  if (mr.status == MetschStatus::hypothesis_failed) {
    out.failure = LocalFailure::hypothesis;
    out.message = mr.message;
    return out;
  }
  if (mr.status == MetschStatus::partition_failed) {
    out.failure = LocalFailure::partition;
    out.message = mr.message;
    return out;
  }

  for (const auto& clique : out.cliques)
    for (Color i : out.colors) {
      std::size_t count = 0;
      for (Vertex v : clique)
        count += row[v] == i ? 1 : 0;
      const double lam = static_cast<double>(*pr.lambda[i]);
      if (count == 0)
        continue;
      if (count < (1.0 - tolerance) * lam || count > (1.0 + tolerance) * lam) {
        out.failure = LocalFailure::uniformity;
        out.message = "clique at " + std::to_string(u) + " meets color " + std::to_string(i) +
                      " in " + std::to_string(count) + " vertices, lambda = " +
                      std::to_string(*pr.lambda[i]);
        return out;
      }
    }
  return out;
}

std::vector<bool> strong_partition_check(const NondominantGraph& g, Vertex u,
                                         std::span<const Clique> cliques) {
  std::vector<bool> out;
  for (const auto& c : cliques) {
    Bitset common = g.neighbors(u);
    for (Vertex v : c)
      common &= g.neighbors(v);
    out.push_back(common.none());
  }
  return out;
}

}  // namespace cohere
