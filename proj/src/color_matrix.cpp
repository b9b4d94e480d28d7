#include "cohere/color_matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace cohere {

ColorMatrix::ColorMatrix(Storage cells) : cells_(std::move(cells)) {
  if (cells_.rows() != cells_.cols())
    throw PreconditionError("color matrix must be square");
  if (cells_.rows() < 1)
    throw PreconditionError("color matrix needs at least one vertex");

  Color max_color = 0;
  for (Color c : flat())
    max_color = std::max(max_color, c);
  if (static_cast<std::size_t>(max_color) + 1 > kMaxRank)
    throw PreconditionError("rank exceeds " + std::to_string(kMaxRank));
  rank_ = static_cast<std::size_t>(max_color) + 1;

  std::vector<std::uint8_t> seen(rank_, 0);
  for (Color c : flat())
    seen[c] = 1;
  for (std::size_t c = 0; c < rank_; ++c)
    if (!seen[c])
      throw PreconditionError("color " + std::to_string(c) + " is unused; colors must be dense");

  diagonal_.assign(rank_, 0);
  for (std::size_t u = 0; u < size(); ++u)
    diagonal_[cells_(u, u)] = 1;
}

ColorMatrix ColorMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  Storage cells(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n)
      throw PreconditionError("row " + std::to_string(u) + " has " +
                              std::to_string(rows[u].size()) + " entries, expected " +
                              std::to_string(n));
    for (std::size_t v = 0; v < n; ++v) {
      int c = rows[u][v];
      if (c < 0 || static_cast<std::size_t>(c) >= kMaxRank)
        throw PreconditionError("color out of range at (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
      cells(u, v) = static_cast<Color>(c);
    }
  }
  return ColorMatrix(std::move(cells));
}

std::size_t ColorMatrix::diagonal_color_count() const {
  return static_cast<std::size_t>(std::count(diagonal_.begin(), diagonal_.end(), 1));
}

ColorMatrix canonical_renumbering(const ColorMatrix& m) {
  const std::size_t r = m.rank();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first(r, unseen);
  auto cells = m.flat();
  for (std::size_t idx = 0; idx < cells.size(); ++idx)
    if (first[cells[idx]] == unseen)
      first[cells[idx]] = idx;

  std::vector<Color> order(r);
  std::iota(order.begin(), order.end(), Color{0});
  std::sort(order.begin(), order.end(), [&](Color a, Color b) {
    bool da = m.is_diagonal_color(a), db = m.is_diagonal_color(b);
    if (da != db)
      return da;
    return first[a] < first[b];
  });
  std::vector<Color> map(r);
  for (std::size_t k = 0; k < r; ++k)
    map[order[k]] = static_cast<Color>(k);
  return recolor(m, map);
}

ColorMatrix recolor(const ColorMatrix& m, std::span<const Color> color_map) {
  if (color_map.size() != m.rank())
    throw PreconditionError("color map size does not match rank");
  ColorMatrix::Storage out(m.size(), m.size());
  Color* dst = out.data();
  for (Color c : m.flat())
    *dst++ = color_map[c];
  return ColorMatrix(std::move(out));
}

ColorMatrix permute_vertices(const ColorMatrix& m, std::span<const Vertex> perm) {
  const std::size_t n = m.size();
  if (perm.size() != n)
    throw PreconditionError("permutation size does not match vertex count");
  std::vector<std::uint8_t> hit(n, 0);
  for (Vertex p : perm) {
    if (p >= n || hit[p])
      throw PreconditionError("not a permutation");
    hit[p] = 1;
  }
  ColorMatrix::Storage out(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      out(perm[u], perm[v]) = m(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return ColorMatrix(std::move(out));
}

ColorMatrix paired_transpose(const ColorMatrix& m, std::span<const Color> pairing) {
  if (pairing.size() != m.rank())
    throw PreconditionError("pairing size does not match rank");
  const std::size_t n = m.size();
  ColorMatrix::Storage out(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      out(u, v) = pairing[m(static_cast<Vertex>(v), static_cast<Vertex>(u))];
  return ColorMatrix(std::move(out));
}

Eigen::MatrixXi adjacency_matrix(const ColorMatrix& m, Color i) {
  return (m.cells().array() == i).cast<int>().matrix();
}

}  // namespace cohere
