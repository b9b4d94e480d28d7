#include "cohere/refinement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cohere/parallel.hpp"

namespace cohere {
namespace {

using Signature = std::vector<std::uint64_t>;  // flattened (key, count) runs

Signature vertex_signature(const ColorMatrix& m, const std::vector<std::uint32_t>& cls, Vertex u) {
  const std::uint64_t r = m.rank();
  auto row = m.row(u);
  std::vector<std::uint64_t> keys(row.size());
  for (std::size_t v = 0; v < row.size(); ++v)
    keys[v] = cls[v] * r + row[v];
  std::sort(keys.begin(), keys.end());
  Signature sig;
  for (std::size_t a = 0; a < keys.size();) {
    std::size_t b = a;
    while (b < keys.size() && keys[b] == keys[a])
      ++b;
    sig.push_back(keys[a]);
    sig.push_back(b - a);
    a = b;
  }
  return sig;
}

// One refinement round; returns the new coloring.
VertexColoring refine_round(const ColorMatrix& m, const VertexColoring& cur) {
  const std::size_t n = m.size();
  std::vector<Signature> sigs(n);
  parallel_for(0, n, [&](std::size_t u) {
    sigs[u] = vertex_signature(m, cur.cls, static_cast<Vertex>(u));
  });
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto less = [&](Vertex a, Vertex b) {
    if (cur.cls[a] != cur.cls[b])
      return cur.cls[a] < cur.cls[b];
    return sigs[a] < sigs[b];
  };
  std::stable_sort(order.begin(), order.end(), less);
  VertexColoring next;
  next.cls.assign(n, 0);
  std::uint32_t id = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0 && less(order[t - 1], order[t]))
      ++id;
    next.cls[order[t]] = id;
  }
  next.classes = n == 0 ? 0 : id + 1;
  return next;
}

}  // namespace

VertexColoring VertexColoring::uniform(std::size_t n) {
  return VertexColoring{std::vector<std::uint32_t>(n, 0), n == 0 ? 0u : 1u};
}

VertexColoring VertexColoring::partition(std::span<const std::uint32_t> labels) {
  std::vector<std::uint32_t> map;
  VertexColoring out;
  out.cls.resize(labels.size());
  constexpr std::uint32_t unset = ~0u;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] >= map.size())
      map.resize(labels[u] + 1, unset);
    if (map[labels[u]] == unset)
      map[labels[u]] = static_cast<std::uint32_t>(out.classes++);
    out.cls[u] = map[labels[u]];
  }
  return out;
}

VertexColoring diagonal_coloring(const ColorMatrix& m) {
  std::vector<std::uint32_t> dense(m.rank(), 0);
  std::uint32_t next = 0;
  for (std::size_t c = 0; c < m.rank(); ++c)
    if (m.is_diagonal_color(static_cast<Color>(c)))
      dense[c] = next++;
  VertexColoring out;
  out.classes = next;
  out.cls.resize(m.size());
  for (Vertex u = 0; u < m.size(); ++u)
    out.cls[u] = dense[m(u, u)];
  return out;
}

RefinementResult naive_refine(const ColorMatrix& m, const VertexColoring& initial) {
  if (initial.size() != m.size())
    throw PreconditionError("coloring size does not match the matrix");
  RefinementResult res;
  res.coloring = initial;
  res.trace.initial_classes = initial.classes;
  while (true) {
    VertexColoring next = refine_round(m, res.coloring);
    res.trace.class_counts.push_back(next.classes);
    if (next.classes == res.coloring.classes)
      break;
    res.coloring = std::move(next);
    ++res.trace.rounds;
  }
  res.trace.stable = true;
  return res;
}

VertexColoring individualize(const VertexColoring& coloring, std::span<const Vertex> s) {
  const std::size_t n = coloring.size();
  std::vector<std::uint32_t> labels = coloring.cls;
  std::vector<std::uint8_t> done(n, 0);
  std::uint32_t fresh = static_cast<std::uint32_t>(coloring.classes);
  for (Vertex x : s) {
    if (x >= n)
      throw PreconditionError("individualized vertex " + std::to_string(x) + " out of range");
    if (done[x])
      continue;
    done[x] = 1;
    labels[x] = fresh++;
  }
  // Compact while preserving class order.
  std::vector<std::uint32_t> used(fresh, 0);
  for (auto c : labels)
    used[c] = 1;
  std::vector<std::uint32_t> remap(fresh, 0);
  std::uint32_t next = 0;
  for (std::uint32_t c = 0; c < fresh; ++c)
    if (used[c])
      remap[c] = next++;
  VertexColoring out;
  out.cls.resize(n);
  for (std::size_t u = 0; u < n; ++u)
    out.cls[u] = remap[labels[u]];
  out.classes = next;
  return out;
}

RefinementResult refine_individualized(const ColorMatrix& m, std::span<const Vertex> s) {
  return naive_refine(m, individualize(diagonal_coloring(m), s));
}

bool completely_splits(const ColorMatrix& m, std::span<const Vertex> s) {
  return refine_individualized(m, s).coloring.discrete();
}

bool completely_splits(const Configuration& cfg, std::span<const Vertex> s) {
  return completely_splits(cfg.matrix(), s);
}

BaseBound base_size_bound(const ColorMatrix& m, std::span<const Vertex> s) {
  if (!completely_splits(m, s))
    throw PreconditionError("the set does not completely split the configuration");
  std::vector<Vertex> uniq(s.begin(), s.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  BaseBound b;
  b.set_size = uniq.size();
  b.bound = boost::multiprecision::pow(boost::multiprecision::cpp_int(m.size()),
                                       static_cast<unsigned>(b.set_size));
  return b;
}

}  // namespace cohere
