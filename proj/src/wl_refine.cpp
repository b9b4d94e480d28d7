#include <algorithm>
#include <numeric>

#include "cohere/parallel.hpp"
#include "cohere/refinement.hpp"

namespace cohere {
namespace {

constexpr std::size_t kDenseHistogramLimit = 4096;

// Flattened (key, count) runs of c(u,w)*r + c(w,v) over w, sorted by key.
using PairSignature = std::vector<std::uint64_t>;

struct Round {
  ColorMatrix matrix;
  std::size_t rank;
};

Round wl_round(const ColorMatrix& m) {
  const std::size_t n = m.size();
  const std::uint64_t r = m.rank();
  ColorMatrix::Storage transposed = m.cells().transpose();
  std::vector<PairSignature> sigs(n * n);

  parallel_for(0, n, [&](std::size_t u) {
    auto row_u = m.row(static_cast<Vertex>(u));
    if (r * r <= kDenseHistogramLimit) {
      std::vector<std::uint32_t> hist(r * r);
      for (std::size_t v = 0; v < n; ++v) {
        std::fill(hist.begin(), hist.end(), 0);
        const Color* col_v = transposed.data() + v * n;
        for (std::size_t w = 0; w < n; ++w)
          ++hist[row_u[w] * r + col_v[w]];
        PairSignature& sig = sigs[u * n + v];
        for (std::size_t key = 0; key < hist.size(); ++key)
          if (hist[key]) {
            sig.push_back(key);
            sig.push_back(hist[key]);
          }
      }
    } else {
      std::vector<std::uint64_t> keys(n);
      for (std::size_t v = 0; v < n; ++v) {
        const Color* col_v = transposed.data() + v * n;
        for (std::size_t w = 0; w < n; ++w)
          keys[w] = row_u[w] * r + col_v[w];
        std::sort(keys.begin(), keys.end());
        PairSignature& sig = sigs[u * n + v];
        for (std::size_t a = 0; a < n;) {
          std::size_t b = a;
          while (b < n && keys[b] == keys[a])
            ++b;
          sig.push_back(keys[a]);
          sig.push_back(b - a);
          a = b;
        }
      }
    }
  });

  auto flat = m.flat();
  auto less = [&](std::size_t a, std::size_t b) {
    bool da = a / n == a % n, db = b / n == b % n;
    if (da != db)
      return da;
    if (flat[a] != flat[b])
      return flat[a] < flat[b];
    return sigs[a] < sigs[b];
  };
  std::vector<std::size_t> order(n * n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), less);

  ColorMatrix::Storage out(n, n);
  std::size_t id = 0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t > 0 && less(order[t - 1], order[t]))
      ++id;
    if (id >= kMaxRank)
      throw PreconditionError("refined rank exceeds the 16-bit color limit");
    out.data()[order[t]] = static_cast<Color>(id);
  }
  return {ColorMatrix(std::move(out)), id + 1};
}

}  // namespace

WlResult wl_refine(const ColorMatrix& m) {
  WlResult res{m, 0, {m.rank()}};
  while (true) {
    Round next = wl_round(res.matrix);
    res.ranks.push_back(next.rank);
    if (next.rank == res.matrix.rank())
      break;
    res.matrix = std::move(next.matrix);
    ++res.rounds;
  }
  return res;
}

}  // namespace cohere
