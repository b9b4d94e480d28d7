#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cohere/generators.hpp"
#include "cohere/isomorphism.hpp"
#include "cohere/parallel.hpp"
#include "cohere/splitter.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cohere;

namespace {

bool oracle_splits(const ColorMatrix& m, const std::vector<Vertex>& s) {
  std::vector<std::size_t> cls(m.size());
  for (Vertex u = 0; u < m.size(); ++u)
    cls[u] = m(u, u);
  std::size_t fresh = m.rank();
  for (Vertex x : s)
    cls[x] = fresh++;
  auto stable = oracle::stable_partition(m, cls);
  return std::set<std::size_t>(stable.begin(), stable.end()).size() == m.size();
}

void expect_verified_split(const ColorMatrix& m, const SplitReport& rep) {
  ASSERT_EQ(rep.outcome, SplitOutcome::split) << rep.strategy;
  EXPECT_TRUE(rep.splits);
  EXPECT_TRUE(std::is_sorted(rep.set.begin(), rep.set.end()));
  EXPECT_TRUE(oracle_splits(m, rep.set));
  EXPECT_EQ(rep.final_classes, m.size());
  EXPECT_EQ(rep.bound, boost::multiprecision::pow(boost::multiprecision::cpp_int(m.size()),
                                                  static_cast<unsigned>(rep.set.size())));
  EXPECT_EQ(rep.attempts, rep.log.size());
}

double metric(const SplitReport& rep, const std::string& key) {
  for (auto& [k, v] : rep.metrics)
    if (k == key)
      return v;
  ADD_FAILURE() << "missing metric " << key;
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Exceptional recognition
// ---------------------------------------------------------------------------

TEST(Recognize, CompleteGraph) {
  auto ex = recognize_exceptional(Configuration::analyze(from_graph(complete_graph(9))));
  EXPECT_EQ(ex.kind, ExceptionalKind::complete);
  EXPECT_EQ(ex.parameter, 9u);
  EXPECT_EQ(ex.certified, Tri::yes);
  EXPECT_EQ(ex.describe(), "complete(9)");
}

TEST(Recognize, TriangularSixWithIsomorphism) {
  auto m = triangular(6);
  auto ex = recognize_exceptional(Configuration::analyze(m));
  EXPECT_EQ(ex.kind, ExceptionalKind::triangular);
  EXPECT_EQ(ex.parameter, 6u);
  EXPECT_EQ(ex.certified, Tri::yes);
  ASSERT_TRUE(ex.isomorphism.has_value());
  EXPECT_TRUE(is_isomorphism(m, triangular(6), *ex.isomorphism));
}

TEST(Recognize, LatticeFour) {
  auto ex = recognize_exceptional(Configuration::analyze(lattice(4)));
  EXPECT_EQ(ex.kind, ExceptionalKind::lattice);
  EXPECT_EQ(ex.parameter, 4u);
  EXPECT_EQ(ex.certified, Tri::yes);
}

TEST(Recognize, ComplementsAndRelabelings) {
  std::vector<Vertex> p(21);
  for (Vertex x = 0; x < 21; ++x)
    p[x] = (x * 5 + 3) % 21;
  auto m = permute_vertices(complement_configuration(triangular(7)), p);
  auto ex = recognize_exceptional(Configuration::analyze(m));
  EXPECT_EQ(ex.kind, ExceptionalKind::triangular);
  EXPECT_TRUE(ex.complemented);
  EXPECT_EQ(ex.certified, Tri::yes);
  EXPECT_EQ(ex.describe(), "complement of triangular(7)");
}

TEST(Recognize, ShrikhandeIsRejected) {
  auto ex = recognize_exceptional(Configuration::analyze(from_graph(shrikhande_graph())));
  EXPECT_EQ(ex.kind, ExceptionalKind::none);
  EXPECT_EQ(ex.certified, Tri::no);
  EXPECT_EQ(ex.note.rfind("pseudo-lattice", 0), 0u) << ex.note;
  EXPECT_EQ(ex.describe(), "none");
}

TEST(Recognize, ParameterMatchBeyondIsoLimit) {
  auto ex = recognize_exceptional(Configuration::analyze(triangular(9)), 10);
  EXPECT_EQ(ex.kind, ExceptionalKind::triangular);
  EXPECT_EQ(ex.certified, Tri::unchecked);
  EXPECT_FALSE(ex.note.empty());
}

TEST(Recognize, OtherConfigurationsAreNotExceptional) {
  for (auto m : {johnson(7, 3), hamming(3, 4), from_graph(paley_graph(13)), fixtures::c5()}) {
    auto ex = recognize_exceptional(Configuration::analyze(m));
    EXPECT_EQ(ex.kind, ExceptionalKind::none);
  }
  EXPECT_THROW(recognize_exceptional(Configuration::analyze(from_graph(path_graph(4)))),
               PreconditionError);
}

// ---------------------------------------------------------------------------
// Distinguishing-number splitting
// ---------------------------------------------------------------------------

TEST(SplitDistinguishing, JohnsonSevenThree) {
  auto m = johnson(7, 3);
  auto cfg = Configuration::analyze(m);
  auto rep = split_by_distinguishing(cfg);
  EXPECT_EQ(rep.strategy, "distinguishing");
  expect_verified_split(m, rep);
  std::uint64_t zeta = ~std::uint64_t{0};
  for (Color c = 1; c < m.rank(); ++c)
    zeta = std::min(zeta, distinguishing_number(cfg, c));
  EXPECT_EQ(metric(rep, "zeta"), static_cast<double>(zeta));
  EXPECT_NEAR(metric(rep, "base_size"), 35 * std::log(35.0) / zeta, 1e-9);
  EXPECT_EQ(rep.log.back().strategy, "greedy");
}

TEST(SplitDistinguishing, ReportsSmallerOfRandomAndGreedy) {
  auto m = hamming(3, 5);
  auto rep = split_by_distinguishing(Configuration::analyze(m));
  expect_verified_split(m, rep);
  std::size_t best = m.size();
  for (const auto& a : rep.log)
    if (a.splits)
      best = std::min(best, a.set_size);
  EXPECT_EQ(rep.set.size(), best);
}

TEST(SplitDistinguishing, DeterminedBySeed) {
  auto cfg = Configuration::analyze(johnson(9, 3));
  SplitOptions a, b;
  a.seed = b.seed = 5;
  auto ra = split_by_distinguishing(cfg, a);
  auto rb = split_by_distinguishing(cfg, b);
  EXPECT_EQ(ra.set, rb.set);
  ASSERT_EQ(ra.log.size(), rb.log.size());
  for (std::size_t k = 0; k < ra.log.size(); ++k)
    EXPECT_EQ(ra.log[k].classes, rb.log[k].classes);
}

TEST(SplitDistinguishing, RequiresPrimitiveCoherent) {
  EXPECT_THROW(split_by_distinguishing(Configuration::analyze(johnson(6, 3))), PreconditionError);
  EXPECT_THROW(split_by_distinguishing(Configuration::analyze(from_graph(path_graph(4)))),
               PreconditionError);
}

// ---------------------------------------------------------------------------
// Good-triple splitting
// ---------------------------------------------------------------------------

TEST(SplitGoodTriples, SplitsAndVerifies) {
  auto m = hamming(3, 6);
  auto cfg = Configuration::analyze(m);
  auto pr = profile(cfg);
  ASSERT_TRUE(pr.dominant.has_value());
  Color i = 0;
  for (Color c = 1; c < m.rank(); ++c)
    if (pr.nondominant(c)) {
      i = c;
      break;
    }
  auto rep = split_by_good_triples(cfg, i, i);
  EXPECT_EQ(rep.strategy, "goodtriples");
  expect_verified_split(m, rep);
  const double n = static_cast<double>(m.size());
  const double p = std::min(1.0, metric(rep, "beta") * std::sqrt(std::log(n) / std::pow(n, 1.5)));
  EXPECT_NEAR(metric(rep, "probability"), p, 1e-12);
}

TEST(SplitGoodTriples, ExhaustsWithTinyBudget) {
  auto cfg = Configuration::analyze(hamming(3, 6));
  Color i = 1;
  SplitOptions opt;
  opt.beta = 1e-9;
  opt.rounds = 2;
  auto rep = split_by_good_triples(cfg, i, i, opt);
  EXPECT_EQ(rep.outcome, SplitOutcome::exhausted);
  EXPECT_FALSE(rep.splits);
  EXPECT_EQ(rep.attempts, 2u);
  EXPECT_EQ(rep.final_classes, 1u);
  EXPECT_FALSE(rep.decisions.empty());
}

TEST(SplitGoodTriples, RejectsDominantColorsAndMissingDominant) {
  auto cfg = Configuration::analyze(hamming(3, 6));
  auto pr = profile(cfg);
  EXPECT_THROW(split_by_good_triples(cfg, *pr.dominant, 1), PreconditionError);
  EXPECT_THROW(split_by_good_triples(Configuration::analyze(triangular(7)), 1, 1),
               PreconditionError);
}

// ---------------------------------------------------------------------------
// Two-clique splitting
// ---------------------------------------------------------------------------

TEST(SplitTwoClique, TriangularStars) {
  for (std::size_t mm : {8, 12}) {
    auto m = triangular(mm);
    auto rep = split_two_clique(Configuration::analyze(m), fixtures::star_geometry(mm));
    EXPECT_EQ(rep.strategy, "twoclique");
    expect_verified_split(m, rep);
    const double k = static_cast<double>(mm - 2);
    EXPECT_EQ(metric(rep, "clique_order"), static_cast<double>(mm - 1));
    EXPECT_NEAR(metric(rep, "rate"), std::min(1.0, 6.0 * std::log(k * k) / k), 1e-12);
  }
}

TEST(SplitTwoClique, LatticeRows) {
  auto m = lattice(8);
  auto rep = split_two_clique(Configuration::analyze(m), fixtures::rook_geometry(8));
  expect_verified_split(m, rep);
}

TEST(SplitTwoClique, RequiresTwoCliquesPerVertex) {
  auto cfg = Configuration::analyze(triangular(8));
  auto geo = fixtures::star_geometry(8);
  geo.incidence[3].push_back(0);
  EXPECT_THROW(split_two_clique(cfg, geo), PreconditionError);
  EXPECT_THROW(split_two_clique(cfg, CliqueGeometry{}), PreconditionError);
}

// ---------------------------------------------------------------------------
// Automatic strategy
// ---------------------------------------------------------------------------

TEST(AutoSplit, ExceptionalFamiliesStop) {
  for (auto m : {triangular(8), lattice(5), from_graph(complete_graph(7))}) {
    auto rep = auto_split(Configuration::analyze(m));
    EXPECT_EQ(rep.outcome, SplitOutcome::exceptional);
    EXPECT_EQ(rep.strategy, "auto");
    ASSERT_TRUE(rep.exceptional.has_value());
    EXPECT_TRUE(rep.set.empty());
    EXPECT_FALSE(rep.splits);
  }
}

TEST(AutoSplit, JohnsonTakesDistinguishingBranch) {
  auto m = johnson(7, 3);
  auto rep = auto_split(Configuration::analyze(m));
  EXPECT_EQ(rep.strategy, "auto/distinguishing");
  expect_verified_split(m, rep);
  EXPECT_GE(metric(rep, "rho"), metric(rep, "rho_threshold"));
  EXPECT_EQ(rep.decisions.front(), "not exceptional");
}

TEST(AutoSplit, NonExceptionalCorpusMembersSplit) {
  for (const auto& member : fixtures::standard_corpus()) {
    auto cfg = Configuration::analyze(member.matrix);
    if (!cfg.is_pcc() || member.matrix.size() > 220)
      continue;
    SCOPED_TRACE(member.name);
    auto rep = auto_split(cfg);
    if (rep.outcome == SplitOutcome::exceptional)
      continue;
    expect_verified_split(member.matrix, rep);
    EXPECT_EQ(rep.strategy.rfind("auto/", 0), 0u);
  }
}

TEST(AutoSplit, IndependentOfThreadCount) {
  auto cfg = Configuration::analyze(hamming(3, 5));
  const std::size_t saved = thread_count();
  set_thread_count(1);
  auto serial = auto_split(cfg);
  set_thread_count(4);
  auto par = auto_split(cfg);
  set_thread_count(saved);
  EXPECT_EQ(serial.set, par.set);
  EXPECT_EQ(serial.strategy, par.strategy);
  EXPECT_EQ(serial.decisions, par.decisions);
  EXPECT_EQ(serial.attempts, par.attempts);
}

TEST(SplitOutcome, Names) {
  EXPECT_STREQ(to_string(SplitOutcome::split), "split");
  EXPECT_STREQ(to_string(SplitOutcome::exceptional), "exceptional");
  EXPECT_STREQ(to_string(SplitOutcome::exhausted), "exhausted");
  EXPECT_STREQ(to_string(ExceptionalKind::lattice), "lattice");
}
