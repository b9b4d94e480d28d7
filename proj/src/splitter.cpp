#include "cohere/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cohere/rng.hpp"

namespace cohere {
namespace {

constexpr std::uint64_t kStreamDistinguishing = 0x1000;
constexpr std::uint64_t kStreamGoodTriples = 0x2000;
constexpr std::uint64_t kStreamTwoClique = 0x3000;

void require_pcc(const Configuration& cfg) {
  if (!cfg.is_pcc())
    throw PreconditionError("splitting requires a primitive coherent configuration");
}

std::vector<Vertex> sample_subset(std::size_t n, std::size_t size, std::uint64_t seed,
                                  std::uint64_t stream) {
  std::vector<Vertex> pool(n);
  for (std::size_t u = 0; u < n; ++u)
    pool[u] = static_cast<Vertex>(u);
  CounterRng rng(seed, stream);
  size = std::min(size, n);
  for (std::size_t t = 0; t < size; ++t)
    std::swap(pool[t], pool[t + rng.below(n - t)]);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Vertex> sample_bernoulli(std::span<const Vertex> from, double p, std::uint64_t seed,
                                     std::uint64_t stream) {
  CounterRng rng(seed, stream);
  std::vector<Vertex> out;
  for (Vertex u : from)
    if (p >= 1.0 || rng.uniform() < p)
      out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

void finish(SplitReport& rep, const ColorMatrix& m, std::vector<Vertex> set) {
  std::sort(set.begin(), set.end());
  rep.set = std::move(set);
  RefinementResult res = refine_individualized(m, rep.set);
  rep.trace = res.trace;
  rep.final_classes = res.coloring.classes;
  rep.splits = res.coloring.discrete();
  rep.outcome = rep.splits ? SplitOutcome::split : SplitOutcome::exhausted;
  rep.bound = 0;
  if (rep.splits)
    rep.bound = boost::multiprecision::pow(boost::multiprecision::cpp_int(m.size()),
                                           static_cast<unsigned>(rep.set.size()));
}

// Greedy: individualize the vertex separating the most pairs that currently
// share a class, until discrete.
std::vector<Vertex> greedy_distinguishing_set(const ColorMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t r = m.rank();
  std::vector<Vertex> set;
  VertexColoring cur = naive_refine(m, diagonal_coloring(m)).coloring;
  std::vector<std::uint32_t> hist;
  while (!cur.discrete()) {
    std::vector<std::uint64_t> class_size(cur.classes, 0);
    for (auto c : cur.cls)
      ++class_size[c];
    std::uint64_t total = 0;
    for (auto s : class_size)
      total += s * (s - 1) / 2;
    std::uint64_t best_score = 0;
    Vertex best = 0;
    bool have = false;
    hist.assign(cur.classes * r, 0);
    for (Vertex x = 0; x < n; ++x) {
      std::fill(hist.begin(), hist.end(), 0);
      auto row = m.row(x);
      for (Vertex a = 0; a < n; ++a)
        ++hist[cur.cls[a] * r + row[a]];
      std::uint64_t same = 0;
      for (std::uint64_t h : hist)
        if (h > 1)
          same += h * (h - 1) / 2;
      std::uint64_t score = total - same;
      if (!have || score > best_score) {
        best_score = score;
        best = x;
        have = true;
      }
    }
    set.push_back(best);
    cur = refine_individualized(m, set).coloring;
  }
  return set;
}

}  // namespace

const char* to_string(SplitOutcome o) {
  switch (o) {
    case SplitOutcome::split: return "split";
    case SplitOutcome::exceptional: return "exceptional";
    default: return "exhausted";
  }
}

SplitReport split_by_distinguishing(const Configuration& cfg, const SplitOptions& opt) {
  require_pcc(cfg);
  const auto& m = cfg.matrix();
  const std::size_t n = cfg.size();
  SplitReport rep;
  rep.strategy = "distinguishing";
  rep.seed = opt.seed;

  std::uint64_t zeta = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t c = 0; c < cfg.rank(); ++c)
    if (!m.is_diagonal_color(static_cast<Color>(c)))
      zeta = std::min(zeta, distinguishing_number(cfg, static_cast<Color>(c)));
  if (cfg.rank() == 1)
    zeta = 1;
  const double base = n > 1 ? n * std::log(static_cast<double>(n)) / static_cast<double>(zeta) : 0;
  rep.metrics = {{"zeta", static_cast<double>(zeta)}, {"base_size", base}};

  std::optional<std::vector<Vertex>> random_set;
  std::size_t index = 0;
  for (double factor = 1.0; !random_set; factor *= 2.0) {
    const std::size_t size = std::min<std::size_t>(n, static_cast<std::size_t>(std::ceil(factor * base)));
    const std::size_t tries = size == n ? 1 : opt.attempts_per_level;
    for (std::size_t a = 0; a < tries && !random_set; ++a, ++index) {
      auto s = sample_subset(n, size, opt.seed, kStreamDistinguishing + index);
      auto res = refine_individualized(m, s);
      rep.log.push_back({"random", index, factor, s.size(), res.coloring.classes,
                         res.coloring.discrete()});
      if (res.coloring.discrete())
        random_set = std::move(s);
    }
    if (size == n)
      break;
  }

  auto greedy = greedy_distinguishing_set(m);
  {
    auto res = refine_individualized(m, greedy);
    rep.log.push_back({"greedy", index, 0.0, greedy.size(), res.coloring.classes,
                       res.coloring.discrete()});
  }
  rep.attempts = rep.log.size();

  std::vector<Vertex> chosen = greedy;
  rep.decisions.push_back("greedy set of size " + std::to_string(greedy.size()));
  if (random_set && random_set->size() < greedy.size()) {
    chosen = *random_set;
    rep.decisions.push_back("random set of size " + std::to_string(random_set->size()) +
                            " is smaller");
  }
  finish(rep, m, std::move(chosen));
  return rep;
}

SplitReport split_by_good_triples(const Configuration& cfg, Color i, Color j,
                                  const SplitOptions& opt) {
  require_pcc(cfg);
  ParameterProfile pr = profile(cfg);
  if (!pr.dominant)
    throw PreconditionError("good-triple splitting needs a dominant color");
  if (i >= pr.r || j >= pr.r || !pr.nondominant(i) || !pr.nondominant(j))
    throw PreconditionError("good-triple splitting needs nondominant colors");
  const auto& m = cfg.matrix();
  const std::size_t n = cfg.size();
  SplitReport rep;
  rep.strategy = "goodtriples";
  rep.seed = opt.seed;
  rep.metrics = {{"i", static_cast<double>(i)}, {"j", static_cast<double>(j)}};

  std::vector<Vertex> all(n);
  for (std::size_t u = 0; u < n; ++u)
    all[u] = static_cast<Vertex>(u);
  const double ln = std::log(static_cast<double>(n));
  double beta = opt.beta;
  for (std::size_t round = 0; round < opt.rounds; ++round, beta *= 2.0) {
    const double p = std::min(1.0, beta * std::sqrt(ln / std::pow(static_cast<double>(n), 1.5)));
    auto s = sample_bernoulli(all, p, opt.seed, kStreamGoodTriples + round);
    auto res = refine_individualized(m, s);
    rep.log.push_back({"bernoulli", round, beta, s.size(), res.coloring.classes,
                       res.coloring.discrete()});
    if (res.coloring.discrete()) {
      rep.attempts = rep.log.size();
      rep.metrics.push_back({"beta", beta});
      rep.metrics.push_back({"probability", p});
      finish(rep, m, std::move(s));
      return rep;
    }
    if (p >= 1.0)
      break;
  }
  rep.attempts = rep.log.size();
  rep.decisions.push_back("attempt budget exhausted");
  rep.outcome = SplitOutcome::exhausted;
  if (!rep.log.empty())
    rep.final_classes = rep.log.back().classes;
  return rep;
}

SplitReport split_two_clique(const Configuration& cfg, const CliqueGeometry& geometry,
                             const SplitOptions& opt) {
  require_pcc(cfg);
  const std::size_t n = cfg.size();
  if (geometry.incidence.size() != n ||
      !std::all_of(geometry.incidence.begin(), geometry.incidence.end(),
                   [](const auto& inc) { return inc.size() == 2; }))
    throw PreconditionError("two-clique splitting needs every vertex in exactly two cliques");
  if (geometry.cliques.size() < 2)
    throw PreconditionError("two-clique splitting needs at least two cliques");

  std::vector<std::size_t> order(geometry.cliques.size());
  for (std::size_t c = 0; c < order.size(); ++c)
    order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (geometry.cliques[a].size() != geometry.cliques[b].size())
      return geometry.cliques[a].size() > geometry.cliques[b].size();
    return geometry.cliques[a] < geometry.cliques[b];
  });
  const Clique& c1 = geometry.cliques[order[0]];
  const Clique& c2 = geometry.cliques[order[1]];
  std::vector<Vertex> pool;
  std::set_union(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(pool));

  const auto& m = cfg.matrix();
  SplitReport rep;
  rep.strategy = "twoclique";
  rep.seed = opt.seed;
  const double k = static_cast<double>(c1.size() - 1);
  double rate = k > 1 ? std::min(1.0, 6.0 * std::log(k * k) / k) : 1.0;
  rep.metrics = {{"clique_order", static_cast<double>(c1.size())}, {"rate", rate}};

  for (std::size_t a = 0; a < opt.rounds; ++a, rate = std::min(1.0, rate * 2.0)) {
    auto s = sample_bernoulli(pool, rate, opt.seed, kStreamTwoClique + a);
    auto res = refine_individualized(m, s);
    bool cliques_split = true;
    std::vector<std::size_t> class_size(res.coloring.classes, 0);
    for (auto c : res.coloring.cls)
      ++class_size[c];
    for (Vertex v : pool)
      cliques_split = cliques_split && class_size[res.coloring.cls[v]] == 1;
    rep.log.push_back({"bernoulli", a, rate, s.size(), res.coloring.classes,
                       res.coloring.discrete()});
    if (cliques_split && res.coloring.discrete()) {
      rep.attempts = rep.log.size();
      finish(rep, m, std::move(s));
      return rep;
    }
    if (rate >= 1.0 && !cliques_split)
      break;
  }
  rep.attempts = rep.log.size();
  rep.decisions.push_back("attempt budget exhausted");
  rep.outcome = SplitOutcome::exhausted;
  if (!rep.log.empty())
    rep.final_classes = rep.log.back().classes;
  return rep;
}

SplitReport auto_split(const Configuration& cfg, const SplitOptions& opt) {
  require_pcc(cfg);
  const std::size_t n = cfg.size();
  std::vector<std::string> decisions;
  std::vector<std::pair<std::string, double>> metrics;

  ExceptionalMatch ex = recognize_exceptional(cfg);
  if (ex.kind != ExceptionalKind::none) {
    SplitReport rep;
    rep.strategy = "auto";
    rep.seed = opt.seed;
    rep.outcome = SplitOutcome::exceptional;
    rep.decisions.push_back("exceptional: " + ex.describe());
    rep.exceptional = std::move(ex);
    return rep;
  }
  decisions.push_back("not exceptional");

  ParameterProfile pr = profile(cfg);
  const double ln = std::log(static_cast<double>(n));
  const double threshold = std::pow(static_cast<double>(n), 2.0 / 3.0) * std::pow(ln, -1.0 / 3.0);
  metrics = {{"rho", static_cast<double>(pr.rho)},
             {"rho_threshold", threshold},
             {"rate_envelope", std::cbrt(static_cast<double>(n)) * std::pow(ln, 4.0 / 3.0)}};

  auto wrap = [&](SplitReport rep) {
    decisions.insert(decisions.end(), rep.decisions.begin(), rep.decisions.end());
    rep.decisions = decisions;
    metrics.insert(metrics.end(), rep.metrics.begin(), rep.metrics.end());
    rep.metrics = metrics;
    rep.strategy = "auto/" + rep.strategy;
    return rep;
  };

  if (!pr.dominant) {
    decisions.push_back("no dominant color: distinguishing");
    return wrap(split_by_distinguishing(cfg, opt));
  }
  if (static_cast<double>(pr.rho) >= threshold) {
    decisions.push_back("rho >= n^(2/3) (ln n)^(-1/3): distinguishing");
    return wrap(split_by_distinguishing(cfg, opt));
  }
  decisions.push_back("rho below threshold: clique geometry");

  GeometryOptions go;
  go.tolerance = opt.tolerance;
  go.seed = opt.seed;
  GeometryResult geo = assemble_geometry(cfg, go);
  if (geo.ok()) {
    bool two = std::all_of(geo.geometry->incidence.begin(), geo.geometry->incidence.end(),
                           [](const auto& inc) { return inc.size() == 2; });
    if (two) {
      decisions.push_back("every vertex in two cliques: two-clique split");
      SplitReport rep = split_two_clique(cfg, *geo.geometry, opt);
      if (rep.splits)
        return wrap(std::move(rep));
      decisions.push_back("two-clique split exhausted");
    } else {
      decisions.push_back("geometry with more than two cliques at some vertex");
    }
  } else {
    decisions.push_back(std::string("no geometry (") + to_string(geo.stage) + ")");
  }

  Color i = 0, j = 0;
  bool have_i = false;
  for (std::size_t c = 0; c < pr.r; ++c)
    if (pr.nondominant(static_cast<Color>(c)) && (!have_i || pr.degrees[c] < pr.degrees[i])) {
      i = static_cast<Color>(c);
      have_i = true;
    }
  if (geo.ok()) {
    j = i;
  } else {
    bool have_k = false;
    Color k = 0;
    for (std::size_t c = 0; c < pr.r; ++c)
      if (pr.nondominant(static_cast<Color>(c)) && (!have_k || *pr.lambda[c] < *pr.lambda[k])) {
        k = static_cast<Color>(c);
        have_k = true;
      }
    j = pr.pairing[k];
  }
  decisions.push_back("good triples with i=" + std::to_string(i) + " j=" + std::to_string(j));
  SplitReport rep = split_by_good_triples(cfg, i, j, opt);
  if (rep.splits)
    return wrap(std::move(rep));
  decisions.push_back("good triples exhausted: distinguishing fallback");
  return wrap(split_by_distinguishing(cfg, opt));
}

}  // namespace cohere
