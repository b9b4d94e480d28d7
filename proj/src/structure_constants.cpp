#include "cohere/structure_constants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "cohere/parallel.hpp"

namespace cohere {
namespace {

std::string pair_str(VertexPair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

// Run-length encoded multiset of (j,k) keys for the pair (u,v).
using Profile = std::vector<StructureConstants::Entry>;

Profile path_profile(const ColorMatrix& m, Vertex u, Vertex v, std::vector<std::uint32_t>& keys) {
  const std::size_t n = m.size();
  const std::uint32_t r = static_cast<std::uint32_t>(m.rank());
  keys.resize(n);
  auto row_u = m.row(u);
  for (std::size_t w = 0; w < n; ++w)
    keys[w] = static_cast<std::uint32_t>(row_u[w]) * r + m(static_cast<Vertex>(w), v);
  std::sort(keys.begin(), keys.end());
  Profile out;
  for (std::size_t a = 0; a < n;) {
    std::size_t b = a;
    while (b < n && keys[b] == keys[a])
      ++b;
    out.push_back({static_cast<Color>(keys[a] / r), static_cast<Color>(keys[a] % r),
                   static_cast<std::uint32_t>(b - a)});
    a = b;
  }
  return out;
}

std::uint32_t lookup(const Profile& p, Color j, Color k) {
  auto it = std::lower_bound(p.begin(), p.end(), std::make_pair(j, k),
                             [](const StructureConstants::Entry& e, std::pair<Color, Color> key) {
                               return std::make_pair(e.j, e.k) < key;
                             });
  if (it != p.end() && it->j == j && it->k == k)
    return it->count;
  return 0;
}

// Least (j,k) at which the two profiles disagree.
std::pair<Color, Color> first_difference(const Profile& a, const Profile& b) {
  std::size_t x = 0, y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && std::make_pair(a[x].j, a[x].k) < std::make_pair(b[y].j, b[y].k)))
      return {a[x].j, a[x].k};
    if (x == a.size() || std::make_pair(b[y].j, b[y].k) < std::make_pair(a[x].j, a[x].k))
      return {b[y].j, b[y].k};
    if (a[x].count != b[y].count)
      return {a[x].j, a[x].k};
    ++x;
    ++y;
  }
  return {0, 0};
}

}  // namespace

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  if (axiom == Axiom::diagonal_separation)
    os << "axiom (i): color " << color << " appears on the diagonal at " << pair_str(first)
       << " and off the diagonal at " << pair_str(second);
  else
    os << "axiom (ii): color " << color << " has reverse color at " << pair_str(first)
       << " different from the reverse color at " << pair_str(second);
  return os.str();
}

ValidationResult validate_configuration(const ColorMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t r = m.rank();
  ValidationResult result;

  std::vector<Vertex> diag_witness(r, kNone);
  for (Vertex u = 0; u < n; ++u)
    if (diag_witness[m(u, u)] == kNone)
      diag_witness[m(u, u)] = u;

  std::vector<VertexPair> first(r, {kNone, kNone});
  std::vector<std::uint8_t> diag_reported(r, 0), pair_reported(r, 0);
  std::vector<std::pair<AxiomViolation, std::size_t>> found;

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      Color c = m(u, v);
      if (u != v && diag_witness[c] != kNone && !diag_reported[c]) {
        diag_reported[c] = 1;
        result.violations.push_back(
            {Axiom::diagonal_separation, c, {diag_witness[c], diag_witness[c]}, {u, v}});
      }
      if (first[c].first == kNone) {
        first[c] = {u, v};
        continue;
      }
      Color expected = m(first[c].second, first[c].first);
      if (m(v, u) != expected && !pair_reported[c]) {
        pair_reported[c] = 1;
        result.violations.push_back({Axiom::pairing, c, first[c], {u, v}});
      }
    }
  }
  std::stable_sort(result.violations.begin(), result.violations.end(),
                   [](const AxiomViolation& a, const AxiomViolation& b) {
                     return std::make_pair(static_cast<int>(a.axiom), a.color) <
                            std::make_pair(static_cast<int>(b.axiom), b.color);
                   });
  return result;
}

std::vector<Color> color_pairing(const ColorMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Color> pairing(m.rank());
  std::vector<std::uint8_t> seen(m.rank(), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      Color c = m(u, v);
      if (!seen[c]) {
        seen[c] = 1;
        pairing[c] = m(v, u);
      }
    }
  return pairing;
}

StructureConstants::StructureConstants(std::size_t rank, std::vector<std::uint32_t> degrees,
                                       std::vector<Color> pairing,
                                       std::vector<std::uint8_t> diagonal,
                                       std::vector<VertexPair> representatives,
                                       std::vector<std::vector<Entry>> entries)
    : rank_(rank),
      degrees_(std::move(degrees)),
      pairing_(std::move(pairing)),
      diagonal_(std::move(diagonal)),
      representatives_(std::move(representatives)),
      entries_(std::move(entries)) {}

std::uint32_t StructureConstants::operator()(Color i, Color j, Color k) const {
  return lookup(entries_[i], j, k);
}

Eigen::MatrixXi StructureConstants::slice(Color i) const {
  Eigen::MatrixXi p = Eigen::MatrixXi::Zero(rank_, rank_);
  for (const Entry& e : entries_[i])
    p(e.j, e.k) = static_cast<int>(e.count);
  return p;
}

std::string CoherenceFailure::describe() const {
  std::ostringstream os;
  os << "not coherent: color " << i << " pairs " << pair_str(representative) << " and "
     << pair_str(witness) << " have " << representative_count << " vs " << witness_count
     << " paths with colors (" << j << "," << k << ")";
  return os.str();
}

CoherenceResult compute_structure_constants(const ColorMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t r = m.rank();

  std::vector<VertexPair> rep(r, {kNone, kNone});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (rep[m(u, v)].first == kNone)
        rep[m(u, v)] = {u, v};

  std::vector<Profile> rep_profile(r);
  {
    std::vector<std::uint32_t> keys;
    for (std::size_t i = 0; i < r; ++i)
      rep_profile[i] = path_profile(m, rep[i].first, rep[i].second, keys);
  }

  // First failing column per row; rows are independent.
  std::vector<Vertex> row_failure(n, kNone);
  parallel_for(0, n, [&](std::size_t u) {
    std::vector<std::uint32_t> keys;
    for (Vertex v = 0; v < n; ++v) {
      Color c = m(static_cast<Vertex>(u), v);
      if (rep[c] == VertexPair{static_cast<Vertex>(u), v})
        continue;
      if (path_profile(m, static_cast<Vertex>(u), v, keys) != rep_profile[c]) {
        row_failure[u] = v;
        return;
      }
    }
  });

  for (Vertex u = 0; u < n; ++u) {
    if (row_failure[u] == kNone)
      continue;
    Vertex v = row_failure[u];
    Color c = m(u, v);
    std::vector<std::uint32_t> keys;
    Profile witness = path_profile(m, u, v, keys);
    auto [j, k] = first_difference(rep_profile[c], witness);
    return CoherenceFailure{c, j, k, rep[c], lookup(rep_profile[c], j, k), {u, v},
                            lookup(witness, j, k)};
  }

  std::vector<std::uint32_t> degrees(r, 0);
  std::vector<std::uint8_t> diagonal(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    diagonal[i] = m.is_diagonal_color(static_cast<Color>(i)) ? 1 : 0;
  for (std::size_t i = 0; i < r; ++i) {
    Vertex u = rep[i].first;
    for (Color c : m.row(u))
      if (c == i)
        ++degrees[i];
  }
  return StructureConstants(r, std::move(degrees), color_pairing(m), std::move(diagonal),
                            std::move(rep), std::move(rep_profile));
}

std::vector<std::string> check_structure_identities(const StructureConstants& p) {
  using Entry = StructureConstants::Entry;
  const std::size_t r = p.rank();
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what, Color i, Color j, Color k) {
    bad.push_back(what + " at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(k) + ")");
  };

  for (std::size_t a = 0; a < r; ++a) {
    Color i = static_cast<Color>(a);
    if (p.degree(i) != p.degree(p.pair_of(i)))
      fail("n_i != n_i*", i, p.pair_of(i), 0);
  }

  if (r <= 32) {
    // Dense exhaustive sweep.
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
          Color i = static_cast<Color>(a), j = static_cast<Color>(b), k = static_cast<Color>(c);
          std::uint64_t pijk = p(i, j, k);
          if (pijk != p(p.pair_of(i), p.pair_of(k), p.pair_of(j)))
            fail("p(i,j,k) != p(i*,k*,j*)", i, j, k);
          if (std::uint64_t(p.degree(i)) * pijk !=
              std::uint64_t(p.degree(j)) * p(j, i, p.pair_of(k)))
            fail("n_i p(i,j,k) != n_j p(j,i,k*)", i, j, k);
        }
  } else {
    // Both maps (i,j,k) -> (i*,k*,j*) and (i,j,k) -> (j,i,k*) are involutions
    // on triples, so checking every nonzero entry covers the zero entries too.
    for (std::size_t a = 0; a < r; ++a) {
      Color i = static_cast<Color>(a);
      for (const Entry& e : p.entries(i)) {
        if (e.count != p(p.pair_of(i), p.pair_of(e.k), p.pair_of(e.j)))
          fail("p(i,j,k) != p(i*,k*,j*)", i, e.j, e.k);
        if (std::uint64_t(p.degree(i)) * e.count !=
            std::uint64_t(p.degree(e.j)) * p(e.j, i, p.pair_of(e.k)))
          fail("n_i p(i,j,k) != n_j p(j,i,k*)", i, e.j, e.k);
      }
    }
  }

  // Row and column sums: sum_j p(i,j,k) = sum_j p(i,k,j) = n_k.
  for (std::size_t a = 0; a < r; ++a) {
    Color i = static_cast<Color>(a);
    std::map<Color, std::uint64_t> by_k, by_j;
    for (const Entry& e : p.entries(i)) {
      by_k[e.k] += e.count;
      by_j[e.j] += e.count;
    }
    for (std::size_t c = 0; c < r; ++c) {
      Color k = static_cast<Color>(c);
      auto sk = by_k.count(k) ? by_k[k] : 0;
      auto sj = by_j.count(k) ? by_j[k] : 0;
      if (sk != p.degree(k))
        fail("sum_j p(i,j,k) != n_k", i, 0, k);
      if (sj != p.degree(k))
        fail("sum_j p(i,k,j) != n_k", i, k, 0);
    }
  }
  return bad;
}

}  // namespace cohere
