#include "cohere/configuration.hpp"

#include <algorithm>
#include <limits>

namespace cohere {

Configuration::Configuration(ColorMatrix m) : matrix_(std::move(m)) {}

Configuration Configuration::analyze(ColorMatrix m) {
  Configuration cfg(std::move(m));
  ValidationResult v = validate_configuration(cfg.matrix_);
  cfg.valid_ = v.ok() ? Tri::yes : Tri::no;
  cfg.violations_ = std::move(v.violations);
  cfg.homogeneous_ = is_homogeneous(cfg.matrix_) ? Tri::yes : Tri::no;
  if (cfg.valid_ != Tri::yes)
    return cfg;

  CoherenceResult coh = compute_structure_constants(cfg.matrix_);
  if (auto* p = std::get_if<StructureConstants>(&coh)) {
    cfg.coherent_ = Tri::yes;
    cfg.constants_ = std::move(*p);
  } else {
    cfg.coherent_ = Tri::no;
    cfg.failure_ = std::get<CoherenceFailure>(coh);
  }
  if (cfg.coherent_ == Tri::yes && cfg.homogeneous_ == Tri::yes)
    cfg.primitive_ = is_primitive(cfg.matrix_).primitive ? Tri::yes : Tri::no;
  return cfg;
}

const StructureConstants& Configuration::constants() const {
  if (!constants_)
    throw PreconditionError("configuration is not known to be coherent");
  return *constants_;
}

bool is_homogeneous(const ColorMatrix& m) {
  for (Vertex u = 1; u < m.size(); ++u)
    if (m(u, u) != m(0, 0))
      return false;
  return true;
}

std::vector<std::uint32_t> strong_components(const ColorMatrix& m, Color i) {
  // Kosaraju with explicit stacks.
  const std::size_t n = m.size();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    std::vector<std::pair<Vertex, Vertex>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      bool pushed = false;
      while (next < n) {
        Vertex v = next++;
        if (m(u, v) == i && !seen[v]) {
          seen[v] = 1;
          stack.push_back({v, 0});
          pushed = true;
          break;
        }
      }
      if (!pushed && stack.back().second >= n) {
        order.push_back(stack.back().first);
        stack.pop_back();
      }
    }
  }

  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(n, unset);
  std::uint32_t count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != unset)
      continue;
    std::vector<Vertex> stack{*it};
    comp[*it] = count;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v = 0; v < n; ++v)
        if (m(v, u) == i && comp[v] == unset) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }

  // Renumber by least member.
  std::vector<std::uint32_t> relabel(count, unset);
  std::uint32_t next = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (relabel[comp[u]] == unset)
      relabel[comp[u]] = next++;
    comp[u] = relabel[comp[u]];
  }
  return comp;
}

PrimitivityResult is_primitive(const ColorMatrix& m) {
  if (!is_homogeneous(m))
    throw PreconditionError("primitivity is defined only for homogeneous configurations");
  PrimitivityResult result;
  for (std::size_t c = 0; c < m.rank(); ++c) {
    Color i = static_cast<Color>(c);
    if (m.is_diagonal_color(i))
      continue;
    auto comp = strong_components(m, i);
    if (*std::max_element(comp.begin(), comp.end()) != 0) {
      result.primitive = false;
      result.disconnected_color = i;
      result.components = std::move(comp);
      return result;
    }
  }
  return result;
}

PrimitivityResult is_primitive(const Configuration& cfg) { return is_primitive(cfg.matrix()); }

ConstituentDigraph::ConstituentDigraph(const ColorMatrix& m, Color i) : m_(&m), color_(i) {
  if (i >= m.rank())
    throw PreconditionError("color out of range");
  if (m.is_diagonal_color(i))
    throw PreconditionError("constituent digraph of a diagonal color requested");
}

std::vector<Vertex> ConstituentDigraph::out_neighbors(Vertex u) const {
  std::vector<Vertex> out;
  auto row = m_->row(u);
  for (Vertex v = 0; v < row.size(); ++v)
    if (row[v] == color_)
      out.push_back(v);
  return out;
}

std::size_t ConstituentDigraph::out_degree(Vertex u) const {
  auto row = m_->row(u);
  return static_cast<std::size_t>(std::count(row.begin(), row.end(), color_));
}

ConstituentDigraph constituent_digraph(const Configuration& cfg, Color i) {
  return ConstituentDigraph(cfg.matrix(), i);
}

}  // namespace cohere
