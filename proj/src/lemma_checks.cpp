#include <algorithm>
#include <cmath>
#include <string>

#include "cohere/analysis.hpp"
#include "cohere/neighborhoods.hpp"
#include "cohere/parallel.hpp"
#include "spheres_internal.hpp"

namespace cohere {
namespace {

using std::to_string;

void require_pcc(const Configuration& cfg) {
  if (!cfg.is_pcc())
    throw PreconditionError("check requires a primitive coherent configuration");
}

CheckOutcome skipped(std::string name, std::string note) {
  CheckOutcome c;
  c.name = std::move(name);
  c.status = CheckStatus::skipped;
  c.note = std::move(note);
  return c;
}

// Sum of n_j over colors with lo < D(j) <= hi.
class DistinguishingIndex {
 public:
  explicit DistinguishingIndex(const ParameterProfile& pr) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
    for (std::size_t c = 0; c < pr.r; ++c)
      items.push_back({pr.distinguishing[c], pr.degrees[c]});
    std::sort(items.begin(), items.end());
    prefix_.push_back(0);
    for (auto& [d, w] : items) {
      keys_.push_back(d);
      prefix_.push_back(prefix_.back() + w);
    }
  }
  // Sum of degrees of colors with D <= x.
  std::uint64_t upto(std::int64_t x) const {
    if (x < 0)
      return 0;
    auto it = std::upper_bound(keys_.begin(), keys_.end(), static_cast<std::uint64_t>(x));
    return prefix_[it - keys_.begin()];
  }
  std::size_t count_upto(std::int64_t x) const {
    if (x < 0)
      return 0;
    return std::upper_bound(keys_.begin(), keys_.end(), static_cast<std::uint64_t>(x)) -
           keys_.begin();
  }

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> prefix_;
};

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::inconclusive: return "inconclusive";
    default: return "skipped";
  }
}

void CheckOutcome::fail(std::string witness) {
  status = CheckStatus::failed;
  if (witnesses.size() < kMaxWitnesses)
    witnesses.push_back(std::move(witness));
}

bool VerificationReport::ok() const { return violations() == 0; }

std::size_t VerificationReport::violations() const {
  std::size_t v = 0;
  for (const auto& c : checks)
    v += c.status == CheckStatus::failed ? 1 : 0;
  return v;
}

VerificationReport check_growth_of_spheres(const Configuration& cfg, const SamplingOptions& opt) {
  require_pcc(cfg);
  const auto& p = cfg.constants();
  const auto& m = cfg.matrix();
  ColorNeighborhoods nb(m);
  auto sources = sample_vertices(cfg.size(), opt, 0x67726f77ULL);

  CheckOutcome out;
  out.name = "growth_of_spheres";
  for (std::size_t ci = 0; ci < cfg.rank(); ++ci) {
    Color i = static_cast<Color>(ci);
    if (p.is_diagonal(i))
      continue;
    std::vector<std::uint64_t> instances(sources.size(), 0);
    std::vector<std::vector<std::string>> fails(sources.size());
    parallel_for(0, sources.size(), [&](std::size_t s) {
      Vertex u = sources[s];
      auto dist = bfs_distances(nb, i, u);
      std::vector<std::uint64_t> sizes;
      for (auto d : dist) {
        if (d == kUnreachable)
          continue;
        if (d >= sizes.size())
          sizes.resize(d + 1, 0);
        ++sizes[d];
      }
      std::string conflict;
      auto by_color = distances_by_color(m, dist, u, i, &conflict);
      if (!conflict.empty()) {
        fails[s].push_back(conflict);
        return;
      }
      for (std::size_t cj = 0; cj < cfg.rank(); ++cj) {
        Color j = static_cast<Color>(cj);
        if (p.is_diagonal(j))
          continue;
        std::uint32_t delta = by_color[j];
        if (delta == kUnreachable || delta < 3)
          continue;
        for (std::uint32_t alpha = 1; alpha + 2 <= delta; ++alpha) {
          ++instances[s];
          std::uint64_t lhs = sizes[alpha + 1] * sizes[delta - alpha];
          std::uint64_t rhs = std::uint64_t{p.degree(i)} * p.degree(j);
          if (lhs < rhs)
            fails[s].push_back("i=" + to_string(i) + " j=" + to_string(j) + " u=" +
                               to_string(u) + " alpha=" + to_string(alpha) + ": " +
                               to_string(lhs) + " < " + to_string(rhs));
        }
      }
    });
    for (std::size_t s = 0; s < sources.size(); ++s) {
      out.instances += instances[s];
      for (auto& f : fails[s])
        out.fail(std::move(f));
    }
  }
  out.metrics.push_back({"sources", static_cast<double>(sources.size())});
  if (out.status == CheckStatus::passed && out.instances == 0)
    out.note = "no color pair at distance 3 or more";
  return {{out}};
}

VerificationReport check_diameter_lemma(const Configuration& cfg, double epsilon,
                                        const SamplingOptions& opt) {
  require_pcc(cfg);
  if (cfg.rank() <= 2)
    return {{skipped("diameter_two", "rank 2")}};
  ParameterProfile pr = profile(cfg);
  if (!pr.dominant)
    return {{skipped("diameter_two", "no dominant color")}};

  const double n = static_cast<double>(pr.n);
  const double threshold = (1.0 - epsilon) * std::cbrt(n * n);
  const bool hypothesis = static_cast<double>(pr.rho) < threshold;
  bool conclusion = true;
  CheckOutcome out;
  out.name = "diameter_two";
  for (std::size_t c = 0; c < pr.r; ++c) {
    Color i = static_cast<Color>(c);
    if (!pr.nondominant(i))
      continue;
    ++out.instances;
    auto dist = color_distances(cfg, i, opt);
    std::uint64_t ni = pr.degrees[c];
    if (dist[*pr.dominant] != 2) {
      conclusion = false;
      out.witnesses.push_back("dist_" + to_string(i) + "(dominant) = " +
                              (dist[*pr.dominant] == kUnreachable
                                   ? std::string("unreachable")
                                   : to_string(dist[*pr.dominant])));
    }
    if (ni * ni < pr.n - 1) {
      conclusion = false;
      out.witnesses.push_back("n_" + to_string(i) + "^2 = " + to_string(ni * ni) + " < n-1");
    }
  }
  out.status = conclusion ? CheckStatus::passed : CheckStatus::inconclusive;
  out.note = std::string("hypothesis ") + (hypothesis ? "holds" : "fails") + ", conclusion " +
             (conclusion ? "holds" : "fails");
  out.metrics = {{"rho", static_cast<double>(pr.rho)},
                 {"threshold", threshold},
                 {"epsilon", epsilon},
                 {"hypothesis", hypothesis ? 1.0 : 0.0},
                 {"conclusion", conclusion ? 1.0 : 0.0}};
  return {{out}};
}

VerificationReport check_identities(const Configuration& cfg, const SamplingOptions& opt) {
  require_pcc(cfg);
  const auto& p = cfg.constants();
  const auto& m = cfg.matrix();
  VerificationReport rep;

  CheckOutcome ident;
  ident.name = "structure_identities";
  ident.instances = static_cast<std::uint64_t>(p.rank()) * p.rank() * p.rank();
  for (auto& w : check_structure_identities(p))
    ident.fail(std::move(w));
  rep.checks.push_back(ident);

  if (cfg.rank() <= 2) {
    for (const char* name :
         {"distinguishing_bruteforce", "average_distinguishing", "large_distinguishing_color",
          "dist_well_defined", "distance_distinguishing", "degree_distinguishing", "mu_bound",
          "few_small_colors", "distinguishing_triangle", "distinguishing_gap",
          "nondominant_basic", "nondominant_applied"})
      rep.checks.push_back(skipped(name, "rank 2"));
    return rep;
  }

  ParameterProfile pr = profile(cfg);
  const std::uint64_t n = pr.n;
  const auto& D = pr.distinguishing;
  auto nondiag = [&](std::size_t c) { return c != pr.diagonal; };

  {
    CheckOutcome c;
    c.name = "distinguishing_bruteforce";
    for (std::size_t ci = 0; ci < pr.r; ++ci) {
      if (!nondiag(ci))
        continue;
      auto [u, v] = p.representative(static_cast<Color>(ci));
      std::uint64_t count = 0;
      for (Vertex w = 0; w < n; ++w)
        count += m(w, u) != m(w, v) ? 1 : 0;
      ++c.instances;
      if (count != D[ci])
        c.fail("color " + to_string(ci) + ": tensor " + to_string(D[ci]) + ", count " +
               to_string(count));
    }
    rep.checks.push_back(c);
  }

  {
    CheckOutcome c;
    c.name = "average_distinguishing";
    c.instances = 1;
    std::uint64_t lhs = 0;
    for (std::size_t j = 0; j < pr.r; ++j)
      if (nondiag(j))
        lhs += D[j] * pr.degrees[j];
    std::uint64_t rhs = (pr.rho + 2) * (n - 1);
    c.metrics = {{"sum_D_n", static_cast<double>(lhs)}, {"bound", static_cast<double>(rhs)}};
    if (lhs < rhs)
      c.fail(to_string(lhs) + " < " + to_string(rhs));
    rep.checks.push_back(c);
  }

  {
    CheckOutcome c;
    c.name = "large_distinguishing_color";
    c.instances = 1;
    bool found = false;
    for (std::size_t j = 0; j < pr.r; ++j)
      found = found || (nondiag(j) && D[j] > pr.rho);
    if (!found)
      c.fail("no color with D > rho = " + to_string(pr.rho));
    rep.checks.push_back(c);
  }

  {
    CheckOutcome wd, c;
    wd.name = "dist_well_defined";
    c.name = "distance_distinguishing";
    for (std::size_t ci = 0; ci < pr.r; ++ci) {
      if (!nondiag(ci))
        continue;
      std::vector<std::uint32_t> dist;
      ++wd.instances;
      try {
        dist = color_distances(cfg, static_cast<Color>(ci), opt);
      } catch (const InvariantError& e) {
        wd.fail(e.what());
        continue;
      }
      for (std::size_t cj = 0; cj < pr.r; ++cj) {
        if (!nondiag(cj))
          continue;
        ++c.instances;
        if (dist[cj] == kUnreachable) {
          c.fail("color " + to_string(cj) + " unreachable in color " + to_string(ci));
          continue;
        }
        if (D[cj] > dist[cj] * D[ci])
          c.fail("D(" + to_string(cj) + ")=" + to_string(D[cj]) + " > dist_" + to_string(ci) +
                 "=" + to_string(dist[cj]) + " * D(" + to_string(ci) + ")=" + to_string(D[ci]));
      }
    }
    rep.checks.push_back(wd);
    rep.checks.push_back(c);
  }

  {
    CheckOutcome c;
    c.name = "degree_distinguishing";
    for (std::size_t ci = 0; ci < pr.r; ++ci) {
      if (!nondiag(ci))
        continue;
      ++c.instances;
      if (pr.degrees[ci] * D[ci] < n - 1)
        c.fail("n_" + to_string(ci) + " * D = " + to_string(pr.degrees[ci] * D[ci]) + " < " +
               to_string(n - 1));
    }
    rep.checks.push_back(c);
  }

  if (pr.dominant) {
    CheckOutcome c;
    c.name = "mu_bound";
    c.instances = 1;
    std::uint64_t lhs = *pr.mu * pr.degrees[*pr.dominant];
    c.metrics = {{"mu", static_cast<double>(*pr.mu)},
                 {"bound", static_cast<double>(pr.rho * pr.rho) / pr.degrees[*pr.dominant]}};
    if (lhs > pr.rho * pr.rho)
      c.fail("mu * n_1 = " + to_string(lhs) + " > rho^2 = " + to_string(pr.rho * pr.rho));
    rep.checks.push_back(c);
  } else {
    rep.checks.push_back(skipped("mu_bound", "no dominant color"));
  }

  {
    CheckOutcome c;
    c.name = "few_small_colors";
    std::vector<Color> colors;
    for (std::size_t ci = 0; ci < pr.r; ++ci)
      if (nondiag(ci))
        colors.push_back(static_cast<Color>(ci));
    auto test = [&](const std::vector<Color>& set) {
      std::uint64_t n_set = 0, max_d = 0;
      for (Color i : set) {
        n_set += pr.degrees[i];
        max_d = std::max(max_d, D[i]);
      }
      std::uint64_t small = 0;
      for (std::size_t j = 0; j < pr.r; ++j)
        if (2 * static_cast<std::uint64_t>(pr.degrees[j]) <= n_set)
          small += pr.degrees[j];
      ++c.instances;
      if (small > 2 * max_d) {
        std::string ids;
        for (Color i : set)
          ids += (ids.empty() ? "" : ",") + to_string(i);
        c.fail("I={" + ids + "}: " + to_string(small) + " > 2*" + to_string(max_d));
      }
    };
    for (Color i : colors)
      test({i});
    if (colors.size() <= 64)
      for (std::size_t a = 0; a < colors.size(); ++a)
        for (std::size_t b = a + 1; b < colors.size(); ++b)
          test({colors[a], colors[b]});
    std::vector<Color> sorted = colors;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](Color a, Color b) { return pr.degrees[a] < pr.degrees[b]; });
    for (std::size_t len = 2; len <= sorted.size(); ++len)
      test(std::vector<Color>(sorted.begin(), sorted.begin() + len));
    rep.checks.push_back(c);
  }

  {
    CheckOutcome c;
    c.name = "distinguishing_triangle";
    for (std::size_t ci = 0; ci < pr.r; ++ci)
      for (const auto& e : p.entries(static_cast<Color>(ci))) {
        ++c.instances;
        std::int64_t di = D[ci], dj = D[e.j], dk = D[e.k];
        if (dj - dk > di || di > dj + dk)
          c.fail("p(" + to_string(ci) + "," + to_string(e.j) + "," + to_string(e.k) +
                 ") > 0 with D = " + to_string(di) + "," + to_string(dj) + "," + to_string(dk));
      }
    rep.checks.push_back(c);
  }

  DistinguishingIndex index(pr);
  const std::int64_t rho = static_cast<std::int64_t>(pr.rho);
  {
    CheckOutcome c;
    c.name = "distinguishing_gap";
    for (std::size_t ci = 0; ci < pr.r; ++ci) {
      if (!nondiag(ci))
        continue;
      std::int64_t di = D[ci];
      for (std::int64_t eta = 0; eta <= rho - di; ++eta) {
        ++c.instances;
        if (index.count_upto(eta + di) == index.count_upto(eta))
          c.fail("i=" + to_string(ci) + " eta=" + to_string(eta) + ": no D in (eta, eta+D(i)]");
      }
    }
    rep.checks.push_back(c);
  }

  if (pr.rho > 0) {
    CheckOutcome basic, applied;
    basic.name = "nondominant_basic";
    applied.name = "nondominant_applied";
    for (std::size_t ci = 0; ci < pr.r; ++ci) {
      if (!nondiag(ci))
        continue;
      std::int64_t di = D[ci];
      std::uint64_t ni = pr.degrees[ci];
      if (di == 0)
        continue;
      for (std::int64_t eta = 0; eta <= rho - 2 * di; ++eta) {
        ++basic.instances;
        std::uint64_t band = index.upto(eta + 3 * di) - index.upto(eta);
        if (ni > band)
          basic.fail("i=" + to_string(ci) + " eta=" + to_string(eta) + ": n_i=" + to_string(ni) +
                     " > " + to_string(band));
      }
      for (std::int64_t eta = 0; eta <= rho; ++eta) {
        ++applied.instances;
        std::uint64_t lhs = static_cast<std::uint64_t>(eta / (3 * di)) * ni;
        std::uint64_t rhs = index.upto(eta);
        if (lhs > rhs)
          applied.fail("i=" + to_string(ci) + " eta=" + to_string(eta) + ": " + to_string(lhs) +
                       " > " + to_string(rhs));
      }
    }
    rep.checks.push_back(basic);
    rep.checks.push_back(applied);
  } else {
    rep.checks.push_back(skipped("nondominant_basic", "rho = 0"));
    rep.checks.push_back(skipped("nondominant_applied", "rho = 0"));
  }
  return rep;
}

}  // namespace cohere
