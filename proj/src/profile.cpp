#include <algorithm>

#include "cohere/analysis.hpp"

namespace cohere {
namespace {

std::uint64_t distinguishing_from_tensor(const StructureConstants& p, Color i) {
  std::uint64_t d = 0;
  for (const auto& e : p.entries(i))
    if (e.j != p.pair_of(e.k))
      d += e.count;
  return d;
}

}  // namespace

std::uint64_t distinguishing_number(const Configuration& cfg, Color i) {
  const auto& p = cfg.constants();
  if (i >= p.rank())
    throw PreconditionError("color out of range");
  if (p.is_diagonal(i))
    throw PreconditionError("distinguishing number of a diagonal color requested");
  return distinguishing_from_tensor(p, i);
}

ParameterProfile profile(const Configuration& cfg) {
  if (!cfg.has_constants())
    throw PreconditionError("profile requires a coherent configuration");
  if (cfg.homogeneous() != Tri::yes)
    throw PreconditionError("profile requires a homogeneous configuration");
  if (cfg.rank() <= 2)
    throw PreconditionError("profile requires rank > 2");

  const auto& p = cfg.constants();
  ParameterProfile pr;
  pr.n = cfg.size();
  pr.r = cfg.rank();
  pr.degrees.assign(p.degrees().begin(), p.degrees().end());
  pr.pairing.assign(p.pairing().begin(), p.pairing().end());
  pr.diagonal = cfg.matrix()(0, 0);
  pr.primitive = cfg.primitive();

  bool have_max = false;
  for (std::size_t c = 0; c < pr.r; ++c) {
    if (c == pr.diagonal)
      continue;
    if (!have_max || pr.degrees[c] > pr.degrees[pr.max_color]) {
      pr.max_color = static_cast<Color>(c);
      have_max = true;
    }
  }
  pr.renumbering.assign(pr.r, 0);
  pr.renumbering[pr.max_color] = 1;
  Color next = 2;
  for (std::size_t c = 0; c < pr.r; ++c)
    if (c != pr.diagonal && c != pr.max_color)
      pr.renumbering[c] = next++;

  pr.rho = pr.n - pr.degrees[pr.max_color] - 1;
  if (2 * static_cast<std::uint64_t>(pr.degrees[pr.max_color]) >= pr.n) {
    pr.dominant = pr.max_color;
    pr.dominant_boundary = 2 * static_cast<std::uint64_t>(pr.degrees[pr.max_color]) == pr.n;
    pr.dominant_symmetric = pr.pairing[pr.max_color] == pr.max_color;
  }

  pr.distinguishing.assign(pr.r, 0);
  for (std::size_t c = 0; c < pr.r; ++c)
    if (c != pr.diagonal)
      pr.distinguishing[c] = distinguishing_from_tensor(p, static_cast<Color>(c));

  pr.lambda.assign(pr.r, std::nullopt);
  if (pr.dominant) {
    std::uint64_t mu = 0;
    for (const auto& e : p.entries(*pr.dominant))
      if (pr.nondominant(e.j) && pr.nondominant(e.k))
        mu += e.count;
    pr.mu = mu;
    for (std::size_t c = 0; c < pr.r; ++c) {
      Color i = static_cast<Color>(c);
      if (!pr.nondominant(i))
        continue;
      std::uint64_t lam = 0;
      for (const auto& e : p.entries(i))
        if (e.j == i && pr.nondominant(e.k))
          lam += e.count;
      pr.lambda[c] = lam;
    }
  }
  return pr;
}

}  // namespace cohere
