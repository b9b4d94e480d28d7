#ifndef COHERE_REFINEMENT_HPP_
#define COHERE_REFINEMENT_HPP_

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohere/color_matrix.hpp"
#include "cohere/configuration.hpp"

namespace cohere {

// A partition of V into classes 0..classes-1, every class nonempty.
struct VertexColoring {
  std::vector<std::uint32_t> cls;
  std::size_t classes = 0;

  std::size_t size() const { return cls.size(); }
  bool discrete() const { return classes == cls.size(); }

  static VertexColoring uniform(std::size_t n);
  // Renumbers the given labels densely by first occurrence.
  static VertexColoring partition(std::span<const std::uint32_t> labels);

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

// Classes by diagonal color, numbered in increasing color order.
VertexColoring diagonal_coloring(const ColorMatrix& m);

struct RefinementTrace {
  std::size_t initial_classes = 0;
  // Rounds that increased the class count.
  std::size_t rounds = 0;
  // Class count after each executed round; the last entry repeats the one
  // before it (the round that found nothing new).
  std::vector<std::size_t> class_counts;
  bool stable = false;
};

struct RefinementResult {
  VertexColoring coloring;
  RefinementTrace trace;
};

// Naive vertex refinement to the stable coloring. The signature of u is the
// sorted list of (class of v, c(u,v), count) over all v including u, so
// differing diagonal colors separate after one round. New classes are
// ordered by (old class, signature).
RefinementResult naive_refine(const ColorMatrix& m, const VertexColoring& initial);

// Moves every vertex of s into a fresh singleton class, numbered after the
// existing classes in the order given; classes left empty are removed.
// Repeated vertices are ignored after their first occurrence.
VertexColoring individualize(const VertexColoring& coloring, std::span<const Vertex> s);

// Stable refinement of the diagonal coloring with s individualized.
RefinementResult refine_individualized(const ColorMatrix& m, std::span<const Vertex> s);

bool completely_splits(const ColorMatrix& m, std::span<const Vertex> s);
bool completely_splits(const Configuration& cfg, std::span<const Vertex> s);

struct WlResult {
  ColorMatrix matrix;
  // Rounds that increased the rank.
  std::size_t rounds = 0;
  std::vector<std::size_t> ranks;
};

// Weisfeiler-Leman refinement to the coherent closure. Each round recolors
// (u,v) by (old color, multiset of c(u,w)*r + c(w,v)); new colors are numbered
// by the sorted order of (diagonal first, old color, signature), which keeps
// the numbering a function of the isomorphism type. When no round is
// productive the input is returned unchanged.
WlResult wl_refine(const ColorMatrix& m);

struct BaseBound {
  std::size_t set_size = 0;
  boost::multiprecision::cpp_int bound;  // n^|S|
};

// Throws PreconditionError unless s completely splits m.
BaseBound base_size_bound(const ColorMatrix& m, std::span<const Vertex> s);

}  // namespace cohere

#endif  // COHERE_REFINEMENT_HPP_
