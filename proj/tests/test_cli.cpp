#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

#include "cohere/ccm_io.hpp"
#include "cohere/generators.hpp"
#include "cohere/parallel.hpp"

using namespace cohere;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cohere_run(std::vector<std::string> args) {
  args.insert(args.begin(), "cohere");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const std::size_t saved = thread_count();
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  set_thread_count(saved);
  return {code, out.str(), err.str()};
}

fs::path tmp_dir() {
  fs::path d = COHERE_TEST_TMP;
  fs::create_directories(d);
  return d;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = tmp_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string write_matrix(const std::string& name, const ColorMatrix& m) {
  return write_file(name, format_ccm(m));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json report_of(const Run& r) {
  return json::parse(r.out);
}

void expect_envelope(const json& j, const std::string& kind) {
  EXPECT_EQ(j.at("kind"), kind);
  EXPECT_EQ(j.at("command"), kind);
  EXPECT_TRUE(j.at("tool_version").is_string());
  EXPECT_TRUE(j.contains("input_digest"));
  EXPECT_TRUE(j.at("parameters").is_object());
  EXPECT_TRUE(j.contains("seed"));
  EXPECT_TRUE(j.at("result").is_object());
  EXPECT_FALSE(j.contains("timing"));
}

}  // namespace

TEST(CliGen, TriangularToStdoutParsesBack) {
  auto r = cohere_run({"gen", "triangular", "7"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto m = parse_ccm(r.out);
  EXPECT_EQ(m.size(), 21u);
  EXPECT_EQ(m, triangular(7));
}

TEST(CliGen, ReportEnvelope) {
  auto path = (tmp_dir() / "t7.ccm").string();
  auto r = cohere_run({"gen", "triangular", "7", "-o", path, "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "gen");
  EXPECT_EQ(j["result"]["n"], 21);
  EXPECT_EQ(j["result"]["rank"], 3);
  EXPECT_TRUE(j["input_digest"].is_null());
  EXPECT_EQ(parse_ccm(slurp(path)), triangular(7));
}

TEST(CliGen, UsageErrors) {
  EXPECT_EQ(cohere_run({"gen", "nosuchfamily", "3"}).code, cli::kUsage);
  EXPECT_EQ(cohere_run({"gen", "triangular"}).code, cli::kUsage);
  EXPECT_EQ(cohere_run({"gen", "triangular", "x"}).code, cli::kUsage);
  EXPECT_EQ(cohere_run({"gen", "random", "10", "0.5"}).code, cli::kUsage);
  EXPECT_EQ(cohere_run({"gen", "random", "10", "1.5", "--seed", "1"}).code, cli::kUsage);
  EXPECT_EQ(cohere_run({}).code, cli::kUsage);
  EXPECT_EQ(cohere_run({"frobnicate"}).code, cli::kUsage);
}

TEST(CliGen, RandomIsSeedDeterministic) {
  auto a = cohere_run({"gen", "random", "20", "0.4", "--seed", "9"});
  auto b = cohere_run({"gen", "random", "20", "0.4", "--seed", "9"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliGen, ComplementOfFile) {
  auto in = write_matrix("t5.ccm", triangular(5));
  auto r = cohere_run({"gen", "complement", in});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(parse_ccm(r.out), complement_configuration(triangular(5)));
}

TEST(CliValidate, CoherentInputPasses) {
  auto in = write_matrix("l3.ccm", lattice(3));
  auto r = cohere_run({"validate", in, "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "validate");
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_TRUE(j["result"]["ok"].get<bool>());
  EXPECT_EQ(j["result"]["n"], 9);
  EXPECT_TRUE(j["input_digest"].is_string());
}

TEST(CliValidate, IncoherentInputIsDomainError) {
  auto in = write_matrix("p4.ccm", from_graph(path_graph(4)));
  auto r = cohere_run({"validate", in, "--report", "-"});
  EXPECT_EQ(r.code, cli::kDomain);
  auto j = report_of(r);
  EXPECT_FALSE(j["result"]["ok"].get<bool>());
  EXPECT_FALSE(j["result"]["coherence_failure"].is_null());
}

TEST(CliValidate, MissingAndMalformedFiles) {
  EXPECT_EQ(cohere_run({"validate", (tmp_dir() / "absent.ccm").string()}).code, cli::kIo);
  auto bad = write_file("bad.ccm", "this is not a matrix\n");
  EXPECT_EQ(cohere_run({"validate", bad}).code, cli::kIo);
}

TEST(CliWl, ClosureOfPathIsCoherent) {
  auto in = write_matrix("p4w.ccm", from_graph(path_graph(4)));
  auto out = (tmp_dir() / "p4w_closure.ccm").string();
  auto r = cohere_run({"wl", in, "-o", out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto v = cohere_run({"validate", out});
  EXPECT_EQ(v.code, cli::kOk) << v.out;
}

TEST(CliWl, ReportSeedIsNull) {
  auto in = write_matrix("c5.ccm", from_graph(cycle_graph(5)));
  auto r = cohere_run({"wl", in, "-o", (tmp_dir() / "c5w.ccm").string(), "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "wl");
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_TRUE(j["result"]["coherent"].get<bool>());
}

TEST(CliRoundTrip, GenValidateWlIsByteStable) {
  auto a = cohere_run({"gen", "johnson", "7", "3"});
  ASSERT_EQ(a.code, cli::kOk);
  auto in = write_file("j73.ccm", a.out);
  auto w = cohere_run({"wl", in});
  ASSERT_EQ(w.code, cli::kOk);
  EXPECT_EQ(w.out, a.out);
}

TEST(CliRefine, IndividualizeReportsDiscreteness) {
  auto in = write_matrix("t5r.ccm", triangular(5));
  auto r = cohere_run({"refine", in, "--individualize", "0,1,3", "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "refine");
  EXPECT_EQ(j["result"]["set"], json({0, 1, 3}));
  EXPECT_TRUE(j["result"]["coloring"].is_array());
  EXPECT_EQ(j["result"]["coloring"].size(), 10u);
  EXPECT_EQ(cohere_run({"refine", in, "--individualize", "10"}).code, cli::kDomain);
}

TEST(CliAnalyze, ProfileFields) {
  auto in = write_matrix("t8a.ccm", triangular(8));
  auto r = cohere_run({"analyze", in, "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "analyze");
  EXPECT_TRUE(j["result"].contains("zeta"));
  EXPECT_TRUE(j["result"].contains("color_distances"));
  EXPECT_TRUE(j["result"].contains("exceptional"));
  EXPECT_EQ(j["seed"], 7);
}

TEST(CliAnalyze, IncoherentInputIsDomainError) {
  auto in = write_matrix("p5.ccm", from_graph(path_graph(5)));
  EXPECT_EQ(cohere_run({"analyze", in}).code, cli::kDomain);
}

TEST(CliGeometry, StarsAndFailure) {
  auto ok = write_matrix("t9g.ccm", triangular(9));
  auto r = cohere_run({"geometry", ok, "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "geometry");
  EXPECT_FALSE(j["result"]["two_clique"].is_null());

  auto small = write_matrix("t6g.ccm", triangular(6));
  auto f = cohere_run({"geometry", small, "--report", "-"});
  EXPECT_EQ(f.code, cli::kDomain);
  EXPECT_TRUE(report_of(f)["result"]["two_clique"].is_null());
}

TEST(CliGoodTriples, ReportsCounts) {
  auto in = write_matrix("h35.ccm", hamming(3, 5));
  auto r = cohere_run({"goodtriples", in, "-i", "2", "-j", "2", "-u", "0", "-v", "1",
                       "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "goodtriples");
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_EQ(cohere_run({"goodtriples", in, "-i", "2", "-j", "2", "-u", "0"}).code, cli::kUsage);
}

TEST(CliSplit, JohnsonSplitsAndIsVerified) {
  auto in = write_matrix("j73s.ccm", johnson(7, 3));
  auto r = cohere_run({"split", in, "--seed", "3", "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "split");
  EXPECT_TRUE(j["result"]["verified"].get<bool>());
  EXPECT_EQ(j["seed"], 3);
}

TEST(CliSplit, ExceptionalInputIsDomainOutcome) {
  auto in = write_matrix("l4s.ccm", lattice(4));
  auto r = cohere_run({"split", in, "--seed", "1", "--report", "-"});
  EXPECT_EQ(r.code, cli::kDomain);
  EXPECT_FALSE(report_of(r)["result"]["verified"].get<bool>());
}

TEST(CliSplit, SeedIsRequiredAndStrategyChecked) {
  auto in = write_matrix("j73u.ccm", johnson(7, 3));
  EXPECT_EQ(cohere_run({"split", in}).code, cli::kUsage);
  EXPECT_EQ(cohere_run({"split", in, "--seed", "1", "--strategy", "magic"}).code, cli::kUsage);
}

TEST(CliSplit, ThreadCountDoesNotChangeReport) {
  auto in = write_matrix("h34t.ccm", hamming(3, 4));
  auto a = cohere_run({"--threads", "1", "split", in, "--seed", "5", "--report", "-"});
  auto b = cohere_run({"--threads", "4", "split", in, "--seed", "5", "--report", "-"});
  ASSERT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliVerify, IdentitiesPassOnPcc) {
  auto in = write_matrix("petersen.ccm", complement_configuration(triangular(5)));
  auto r = cohere_run({"verify", in, "--lemmas", "identities,spheres", "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = report_of(r);
  expect_envelope(j, "verify");
  EXPECT_EQ(j["result"]["violations"], 0);
  EXPECT_TRUE(j["result"]["ok"].get<bool>());
}

TEST(CliVerify, RejectsNonPrimitiveAndUnknownGroups) {
  auto imprim = write_matrix("k33.ccm", from_graph(complete_bipartite_graph(3, 3)));
  EXPECT_EQ(cohere_run({"verify", imprim}).code, cli::kDomain);
  auto in = write_matrix("t5v.ccm", triangular(5));
  EXPECT_EQ(cohere_run({"verify", in, "--lemmas", "nonsense"}).code, cli::kUsage);
}

TEST(CliTiming, OnlyWhenRequested) {
  auto in = write_matrix("t5t.ccm", triangular(5));
  auto r = cohere_run({"--timing", "validate", in, "--report", "-"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(report_of(r).contains("timing"));
}

TEST(CliCorpus, WritesManifestAndMembers) {
  auto dir = tmp_dir() / "corpus";
  fs::remove_all(dir);
  auto r = cohere_run({"corpus", "--out", dir.string(), "--seed", "4", "--random", "3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto manifest = json::parse(slurp(dir / "manifest.json"));
  EXPECT_EQ(manifest["kind"], "corpus");
  EXPECT_TRUE(manifest["input_digest"].is_null());
  const auto& members = manifest["result"]["members"];
  EXPECT_EQ(members.size(), 25u + 3u);
  for (const auto& e : members) {
    auto text = slurp(dir / e["file"].get<std::string>());
    EXPECT_EQ(e["coherent"], true) << e["name"];
    EXPECT_EQ(parse_ccm(text).size(), e["n"].get<std::size_t>());
  }
  EXPECT_EQ(cohere_run({"corpus", "--out", dir.string()}).code, cli::kUsage);
}

TEST(CliStdin, DashReadsStandardInput) {
  std::istringstream in(format_ccm(triangular(5)));
  auto* old = std::cin.rdbuf(in.rdbuf());
  auto r = cohere_run({"validate", "-"});
  std::cin.rdbuf(old);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
}
