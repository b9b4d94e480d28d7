#include "cohere/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cohere/rng.hpp"

namespace cohere {
namespace {

void require(bool cond, const std::string& msg) {
  if (!cond)
    throw PreconditionError(msg);
}

// Colors c(u,v) via a callback returning the class index; the callback must
// return 0 exactly on the diagonal.
template <class F>
ColorMatrix build(std::size_t n, F&& color_of) {
  ColorMatrix::Storage cells(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      cells(u, v) = static_cast<Color>(color_of(u, v));
  return ColorMatrix(std::move(cells));
}

// k-subsets of [m] in colex order, each sorted ascending.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k == 0)
    return {{}};
  while (true) {
    out.push_back(cur);
    // Colex successor: bump the lowest element that can move up.
    std::size_t i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : m))
      ++i;
    if (i == k)
      break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j)
      cur[j] = j;
  }
  return out;
}

}  // namespace

void GraphInput::validate() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [a, b] : edges) {
    require(a < n && b < n, "edge endpoint out of range");
    require(a != b, "loop at vertex " + std::to_string(a));
    auto key = std::minmax(a, b);
    require(seen.insert({key.first, key.second}).second,
            "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  }
}

void PermutationList::validate() const {
  for (const auto& g : generators) {
    require(g.size() == degree, "generator has wrong degree");
    std::vector<std::uint8_t> hit(degree, 0);
    for (Vertex x : g) {
      require(x < degree && !hit[x], "generator is not a bijection");
      hit[x] = 1;
    }
  }
}

ColorMatrix from_graph(const GraphInput& g) {
  require(g.n >= 1, "graph needs at least one vertex");
  g.validate();
  const std::size_t n = g.n;
  std::vector<std::uint8_t> adj(n * n, 0);
  for (auto [a, b] : g.edges)
    adj[a * n + b] = adj[b * n + a] = 1;
  const bool has_edges = !g.edges.empty();
  return build(n, [&](std::size_t u, std::size_t v) -> int {
    if (u == v)
      return 0;
    if (adj[u * n + v])
      return 1;
    return has_edges ? 2 : 1;
  });
}

GraphInput line_graph(const GraphInput& h) {
  h.validate();
  GraphInput out;
  out.n = h.edges.size();
  for (std::size_t a = 0; a < h.edges.size(); ++a)
    for (std::size_t b = a + 1; b < h.edges.size(); ++b) {
      auto [p, q] = h.edges[a];
      auto [s, t] = h.edges[b];
      if (p == s || p == t || q == s || q == t)
        out.edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  return out;
}

GraphInput complete_graph(std::size_t n) {
  GraphInput g{n, {}};
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      g.edges.push_back({a, b});
  return g;
}

GraphInput complete_bipartite_graph(std::size_t a, std::size_t b) {
  GraphInput g{a + b, {}};
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y)
      g.edges.push_back({x, static_cast<Vertex>(a + y)});
  return g;
}

GraphInput cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  GraphInput g{n, {}};
  for (Vertex a = 0; a < n; ++a)
    g.edges.push_back({a, static_cast<Vertex>((a + 1) % n)});
  return g;
}

GraphInput path_graph(std::size_t n) {
  require(n >= 1, "path needs at least 1 vertex");
  GraphInput g{n, {}};
  for (Vertex a = 0; a + 1 < n; ++a)
    g.edges.push_back({a, a + 1});
  return g;
}

ColorMatrix triangular(std::size_t m) {
  require(m >= 4, "triangular(m) requires m >= 4");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      pairs.push_back({a, b});
  return build(pairs.size(), [&](std::size_t u, std::size_t v) -> int {
    if (u == v)
      return 0;
    auto [a, b] = pairs[u];
    auto [c, d] = pairs[v];
    return (a == c || a == d || b == c || b == d) ? 1 : 2;
  });
}

ColorMatrix lattice(std::size_t m) {
  require(m >= 2, "lattice(m) requires m >= 2");
  return build(m * m, [&](std::size_t u, std::size_t v) -> int {
    if (u == v)
      return 0;
    return (u / m == v / m || u % m == v % m) ? 1 : 2;
  });
}

ColorMatrix johnson(std::size_t m, std::size_t k) {
  require(k >= 1 && m >= 2 * k, "johnson(m,k) requires m >= 2k >= 2");
  auto subsets = colex_subsets(m, k);
  return build(subsets.size(), [&](std::size_t u, std::size_t v) -> int {
    const auto& a = subsets[u];
    const auto& b = subsets[v];
    std::size_t common = 0;
    for (std::size_t x : a)
      common += std::binary_search(b.begin(), b.end(), x) ? 1 : 0;
    return static_cast<int>(k - common);
  });
}

ColorMatrix hamming(std::size_t d, std::size_t m) {
  require(d >= 1 && m >= 2, "hamming(d,m) requires d >= 1, m >= 2");
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= m;
    require(n <= 100000, "hamming scheme too large");
  }
  return build(n, [&](std::size_t u, std::size_t v) -> int {
    int dist = 0;
    for (std::size_t i = 0; i < d; ++i) {
      dist += (u % m != v % m) ? 1 : 0;
      u /= m;
      v /= m;
    }
    return dist;
  });
}

ColorMatrix complement_configuration(const ColorMatrix& m) {
  require(m.rank() == 3, "complement requires a rank-3 configuration");
  require(m.is_diagonal_color(0) && !m.is_diagonal_color(1) && !m.is_diagonal_color(2),
          "complement requires color 0 diagonal and colors 1, 2 off-diagonal");
  const std::vector<Color> swap{0, 2, 1};
  return recolor(m, swap);
}

ColorMatrix orbital_configuration(const PermutationList& perms) {
  perms.validate();
  const std::size_t n = perms.degree;
  require(n >= 1, "permutation degree must be positive");
  const std::size_t cells = n * n;

  std::vector<std::uint32_t> parent(cells);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : perms.generators)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        auto a = find(static_cast<std::uint32_t>(u * n + v));
        auto b = find(static_cast<std::uint32_t>(g[u] * n + g[v]));
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }

  // Number orbits by first cell, then canonicalize.
  std::vector<std::uint32_t> label(cells, ~0u);
  std::uint32_t next = 0;
  ColorMatrix::Storage out(n, n);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    auto root = find(static_cast<std::uint32_t>(idx));
    if (label[root] == ~0u) {
      require(next < kMaxRank, "too many orbitals for a 16-bit color matrix");
      label[root] = next++;
    }
    out.data()[idx] = static_cast<Color>(label[root]);
  }
  return canonical_renumbering(ColorMatrix(std::move(out)));
}

GraphInput paley_graph(std::size_t q) {
  require(q >= 5 && q % 4 == 1, "paley graph requires q = 1 mod 4");
  for (std::size_t d = 2; d * d <= q; ++d)
    require(q % d != 0, "paley graph implemented for prime q only");
  std::vector<std::uint8_t> square(q, 0);
  for (std::size_t x = 1; x < q; ++x)
    square[(x * x) % q] = 1;
  GraphInput g{q, {}};
  for (Vertex a = 0; a < q; ++a)
    for (Vertex b = a + 1; b < q; ++b)
      if (square[(b - a) % q])
        g.edges.push_back({a, b});
  return g;
}

GraphInput shrikhande_graph() {
  GraphInput g{16, {}};
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  std::set<std::pair<Vertex, Vertex>> seen;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& s : steps)
        for (int sign : {1, -1}) {
          int c = ((a + sign * s[0]) % 4 + 4) % 4;
          int d = ((b + sign * s[1]) % 4 + 4) % 4;
          const Vertex x = static_cast<Vertex>(4 * a + b), y = static_cast<Vertex>(4 * c + d);
          const std::pair<Vertex, Vertex> e{std::min(x, y), std::max(x, y)};
          if (seen.insert(e).second)
            g.edges.push_back(e);
        }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

GraphInput random_graph(std::size_t n, double p, std::uint64_t seed) {
  CounterRng rng(seed, 0x67726170ULL);
  GraphInput g{n, {}};
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rng.uniform() < p)
        g.edges.push_back({a, b});
  return g;
}

}  // namespace cohere
