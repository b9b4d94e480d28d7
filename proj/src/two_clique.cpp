#include <algorithm>
#include <cmath>

#include "cohere/cliques.hpp"
#include "cohere/generators.hpp"
#include "cohere/isomorphism.hpp"

namespace cohere {
namespace {

std::optional<std::size_t> triangular_parameter(std::size_t n) {
  auto m = static_cast<std::size_t>(std::llround((1.0 + std::sqrt(1.0 + 8.0 * n)) / 2.0));
  if (m >= 4 && m * (m - 1) / 2 == n)
    return m;
  return std::nullopt;
}

std::optional<std::size_t> lattice_parameter(std::size_t n) {
  auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (m >= 2 && m * m == n)
    return m;
  return std::nullopt;
}

}  // namespace

std::vector<FamilyMatch> match_line_graph_families(const Configuration& cfg,
                                                   std::size_t iso_limit) {
  std::vector<FamilyMatch> out;
  if (cfg.rank() != 3 || !cfg.has_constants() || cfg.homogeneous() != Tri::yes)
    return out;
  const auto& p = cfg.constants();
  const std::size_t n = cfg.size();
  const Color diag = cfg.matrix()(0, 0);
  std::vector<Color> offdiag;
  for (Color c = 0; c < 3; ++c)
    if (c != diag)
      offdiag.push_back(c);

  for (Color edge : offdiag) {
    Color non = edge == offdiag[0] ? offdiag[1] : offdiag[0];
    const std::size_t k = p.degree(edge), lambda = p(edge, edge, edge), mu = p(non, edge, edge);
    std::vector<FamilyMatch> found;
    if (auto m = triangular_parameter(n); m && k == 2 * (*m - 2) && lambda == *m - 2 && mu == 4)
      found.push_back({"triangular", *m, edge, edge != offdiag[0], std::nullopt, Tri::unchecked});
    if (auto m = lattice_parameter(n); m && k == 2 * (*m - 1) && lambda == *m - 2 && mu == 2)
      found.push_back({"lattice", *m, edge, edge != offdiag[0], std::nullopt, Tri::unchecked});
    for (auto& f : found) {
      if (n <= iso_limit) {
        ColorMatrix model = f.family == "triangular" ? triangular(f.parameter) : lattice(f.parameter);
        const std::vector<Color> colors{diag, edge, non};
        model = recolor(model, colors);
        auto search = find_isomorphism(cfg.matrix(), model);
        if (search.mapping) {
          f.isomorphism = std::move(search.mapping);
          f.certified = Tri::yes;
        } else if (search.complete) {
          f.certified = Tri::no;
        }
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

TwoCliqueClassification two_clique_characterization(const Configuration& cfg,
                                                    const CliqueGeometry& geometry,
                                                    std::size_t iso_limit) {
  TwoCliqueClassification tc;
  tc.rank = cfg.rank();
  tc.all_in_two = !geometry.incidence.empty() &&
                  std::all_of(geometry.incidence.begin(), geometry.incidence.end(),
                              [](const auto& inc) { return inc.size() == 2; });
  if (tc.rank == 3) {
    tc.matches = match_line_graph_families(cfg, iso_limit);
  } else if (tc.rank == 4) {
    ParameterProfile pr = profile(cfg);
    std::vector<Color> nondom;
    for (std::size_t c = 0; c < pr.r; ++c)
      if (pr.nondominant(static_cast<Color>(c)))
        nondom.push_back(static_cast<Color>(c));
    tc.nondominant_paired =
        nondom.size() == 2 && pr.pairing[nondom[0]] == nondom[1];
    bool meet = true;
    for (std::size_t a = 0; a < geometry.cliques.size() && meet; ++a)
      for (std::size_t b = a + 1; b < geometry.cliques.size() && meet; ++b) {
        std::vector<Vertex> common;
        std::set_intersection(geometry.cliques[a].begin(), geometry.cliques[a].end(),
                              geometry.cliques[b].begin(), geometry.cliques[b].end(),
                              std::back_inserter(common));
        meet = common.size() == 1;
      }
    tc.cliques_pairwise_meet = meet;
  }

  if (!tc.all_in_two) {
    tc.verdict = "not_two_clique";
  } else if (tc.rank == 3) {
    bool certified = false, matched = !tc.matches.empty();
    for (const auto& f : tc.matches)
      certified = certified || f.certified == Tri::yes;
    tc.verdict = certified ? "line_graph_family"
                 : matched && std::all_of(tc.matches.begin(), tc.matches.end(),
                                          [](const FamilyMatch& f) {
                                            return f.certified == Tri::unchecked;
                                          })
                     ? "line_graph_family_parameters"
                     : "none";
  } else if (tc.rank == 4 && *tc.nondominant_paired && *tc.cliques_pairwise_meet) {
    tc.verdict = "rank_four_exception";
  } else {
    tc.verdict = "none";
  }
  return tc;
}

}  // namespace cohere
