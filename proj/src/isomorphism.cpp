#include "cohere/isomorphism.hpp"

#include "cohere/refinement.hpp"

namespace cohere {
namespace {

class Search {
 public:
  Search(const ColorMatrix& a, const ColorMatrix& b, std::size_t budget)
      : a_(a), b_(b), n_(a.size()), budget_(budget), joint_(build_union()) {}

  IsomorphismSearch run() {
    IsomorphismSearch out;
    out.mapping = descend(VertexColoring::uniform(2 * n_));
    out.complete = !exhausted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  ColorMatrix build_union() const {
    const std::size_t r = a_.rank();
    ColorMatrix::Storage cells(2 * n_, 2 * n_);
    cells.setConstant(static_cast<Color>(r));
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v) {
        cells(u, v) = a_(u, v);
        cells(n_ + u, n_ + v) = b_(u, v);
      }
    return ColorMatrix(std::move(cells));
  }

  std::optional<std::vector<Vertex>> descend(const VertexColoring& start) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return std::nullopt;
    }
    VertexColoring c = naive_refine(joint_, start).coloring;

    std::vector<std::size_t> count_a(c.classes, 0), count_b(c.classes, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      ++count_a[c.cls[u]];
      ++count_b[c.cls[n_ + u]];
    }
    if (count_a != count_b)
      return std::nullopt;

    std::size_t target = c.classes;
    for (std::size_t k = 0; k < c.classes; ++k)
      if (count_a[k] > 1) {
        target = k;
        break;
      }

    if (target == c.classes) {
      std::vector<Vertex> image_of_class(c.classes);
      for (std::size_t u = 0; u < n_; ++u)
        image_of_class[c.cls[n_ + u]] = static_cast<Vertex>(u);
      std::vector<Vertex> perm(n_);
      for (std::size_t u = 0; u < n_; ++u)
        perm[u] = image_of_class[c.cls[u]];
      if (is_isomorphism(a_, b_, perm))
        return perm;
      return std::nullopt;
    }

    Vertex x = 0;
    while (c.cls[x] != target)
      ++x;
    for (std::size_t y = n_; y < 2 * n_; ++y) {
      if (c.cls[y] != target)
        continue;
      std::vector<std::uint32_t> labels = c.cls;
      labels[x] = labels[y] = static_cast<std::uint32_t>(c.classes);
      if (auto found = descend(VertexColoring::partition(labels)))
        return found;
      if (exhausted_)
        return std::nullopt;
    }
    return std::nullopt;
  }

  const ColorMatrix& a_;
  const ColorMatrix& b_;
  std::size_t n_;
  std::size_t budget_;
  ColorMatrix joint_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

bool is_isomorphism(const ColorMatrix& a, const ColorMatrix& b, const std::vector<Vertex>& perm) {
  if (a.size() != b.size() || perm.size() != a.size())
    return false;
  std::vector<std::uint8_t> hit(a.size(), 0);
  for (Vertex x : perm) {
    if (x >= a.size() || hit[x])
      return false;
    hit[x] = 1;
  }
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = 0; v < a.size(); ++v)
      if (b(perm[u], perm[v]) != a(u, v))
        return false;
  return true;
}

IsomorphismSearch find_isomorphism(const ColorMatrix& a, const ColorMatrix& b,
                                   std::size_t node_budget) {
  if (a.size() != b.size() || a.rank() != b.rank())
    return {};
  return Search(a, b, node_budget).run();
}

}  // namespace cohere
