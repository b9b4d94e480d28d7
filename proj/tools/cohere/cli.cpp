#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cohere/ccm_io.hpp"
#include "cohere/generators.hpp"
#include "cohere/parallel.hpp"
#include "cohere/rng.hpp"
#include "report_json.hpp"

namespace cohere::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool timing = false;
  bool canonical = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::string read_bytes(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    throw IoError("cannot read " + path);
  return ss.str();
}

void write_bytes(Context& ctx, const std::string& path, std::string_view bytes) {
  if (path == "-") {
    ctx.out << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw IoError("cannot open " + path + " for writing");
  f << bytes;
  f.flush();
  if (!f)
    throw IoError("cannot write " + path);
}

struct Input {
  std::string digest;
  ColorMatrix matrix;
};

Input load_input(const std::string& path) {
  std::string bytes = read_bytes(path);
  return {content_digest(bytes), parse_ccm(bytes)};
}

void emit_report(Context& ctx, const std::string& path, json report) {
  if (path.empty())
    return;
  if (ctx.timing) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - ctx.start;
    report["timing"] = {{"seconds", dt.count()}};
  }
  write_bytes(ctx, path, report.dump(2) + "\n");
}

std::ostream& human(Context& ctx, const std::string& report_path) {
  static std::ostream null_stream(nullptr);
  return report_path == "-" ? null_stream : ctx.out;
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

double parse_real(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size())
      return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("bad ") + what + ": '" + s + "'");
}

void require_coherent(const Configuration& cfg) {
  if (cfg.valid() != Tri::yes)
    throw PreconditionError("input violates the configuration axioms; run validate");
  if (cfg.coherent() != Tri::yes)
    throw PreconditionError("input is not coherent; run validate or wl");
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::vector<std::string> params;
  std::string output;
  std::string report;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

int run_gen(Context& ctx, const GenOptions& o) {
  const auto& ps = o.params;
  auto arity = [&](std::size_t k, const char* usage) {
    if (ps.size() != k)
      throw UsageError("usage: cohere gen " + o.family + " " + usage);
  };
  auto count = [&](std::size_t idx) { return parse_count(ps[idx], "parameter"); };
  std::optional<std::string> digest;
  auto file_text = [&](std::size_t idx) {
    std::string text = read_bytes(ps[idx]);
    digest = content_digest(text);
    return text;
  };
  std::optional<std::uint64_t> seed;

  ColorMatrix m;
  const std::string& f = o.family;
  if (f == "triangular") {
    arity(1, "<m>");
    m = triangular(count(0));
  } else if (f == "lattice") {
    arity(1, "<m>");
    m = lattice(count(0));
  } else if (f == "johnson") {
    arity(2, "<m> <k>");
    m = johnson(count(0), count(1));
  } else if (f == "hamming") {
    arity(2, "<d> <m>");
    m = hamming(count(0), count(1));
  } else if (f == "paley") {
    arity(1, "<q>");
    m = from_graph(paley_graph(count(0)));
  } else if (f == "shrikhande") {
    arity(0, "");
    m = from_graph(shrikhande_graph());
  } else if (f == "complete") {
    arity(1, "<n>");
    m = from_graph(complete_graph(count(0)));
  } else if (f == "bipartite") {
    arity(2, "<a> <b>");
    m = from_graph(complete_bipartite_graph(count(0), count(1)));
  } else if (f == "cycle") {
    arity(1, "<n>");
    m = from_graph(cycle_graph(count(0)));
  } else if (f == "path") {
    arity(1, "<n>");
    m = from_graph(path_graph(count(0)));
  } else if (f == "graph") {
    arity(1, "<edge-list file>");
    m = from_graph(parse_edge_list(file_text(0)));
  } else if (f == "line") {
    arity(1, "<edge-list file>");
    m = from_graph(line_graph(parse_edge_list(file_text(0))));
  } else if (f == "orbital") {
    arity(1, "<permutation file>");
    m = orbital_configuration(parse_permutations(file_text(0)));
  } else if (f == "complement") {
    arity(1, "<ccm file>");
    m = complement_configuration(parse_ccm(file_text(0)));
  } else if (f == "random") {
    arity(2, "<n> <p> --seed <s>");
    if (o.seed_opt->count() == 0)
      throw UsageError("gen random requires --seed");
    seed = o.seed;
    double p = parse_real(ps[1], "probability");
    if (!(p >= 0.0 && p <= 1.0))
      throw UsageError("probability must lie in [0,1]");
    m = from_graph(random_graph(count(0), p, o.seed));
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  if (ctx.canonical)
    m = canonical_renumbering(m);

  std::string text = format_ccm(m);
  write_bytes(ctx, o.output.empty() ? "-" : o.output, text);
  if (!o.output.empty())
    human(ctx, o.report) << "wrote " << o.output << ": n=" << m.size() << " r=" << m.rank() << "\n";

  json params = {{"family", f}, {"params", ps}, {"output", o.output}, {"canonical", ctx.canonical}};
  json result = {{"n", m.size()}, {"rank", m.rank()}, {"output_digest", content_digest(text)}};
  emit_report(ctx, o.report, envelope("gen", "gen", digest, params, seed, result));
  return kOk;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct FileOptions {
  std::string input;
  std::string report;
};

int run_validate(Context& ctx, const FileOptions& o) {
  Input in = load_input(o.input);
  Configuration cfg = Configuration::analyze(in.matrix);
  std::ostream& h = human(ctx, o.report);

  json violations = json::array();
  for (const auto& v : cfg.violations()) {
    violations.push_back(to_json(v));
    h << "axiom violation: " << v.describe() << "\n";
  }
  json failure = nullptr;
  if (cfg.coherence_failure()) {
    failure = to_json(*cfg.coherence_failure());
    h << "not coherent: " << cfg.coherence_failure()->describe() << "\n";
  }
  json identities = json::array();
  if (cfg.has_constants() && cfg.homogeneous() == Tri::yes)
    for (auto& s : check_structure_identities(cfg.constants())) {
      h << "identity violation: " << s << "\n";
      identities.push_back(std::move(s));
    }
  json degrees = nullptr, pairing = nullptr;
  if (cfg.has_constants()) {
    const auto d = cfg.constants().degrees();
    const auto p = cfg.constants().pairing();
    degrees = std::vector<std::uint32_t>(d.begin(), d.end());
    pairing = std::vector<Color>(p.begin(), p.end());
  }
  const bool ok = cfg.valid() == Tri::yes && cfg.coherent() == Tri::yes && identities.empty();
  h << "n=" << cfg.size() << " r=" << cfg.rank() << " valid=" << to_string(cfg.valid())
    << " coherent=" << to_string(cfg.coherent()) << " homogeneous=" << to_string(cfg.homogeneous())
    << " primitive=" << to_string(cfg.primitive()) << "\n";

  json result = {{"n", cfg.size()},
                 {"rank", cfg.rank()},
                 {"ok", ok},
                 {"valid", tri_json(cfg.valid())},
                 {"coherent", tri_json(cfg.coherent())},
                 {"homogeneous", tri_json(cfg.homogeneous())},
                 {"primitive", tri_json(cfg.primitive())},
                 {"violations", violations},
                 {"coherence_failure", failure},
                 {"identity_violations", identities},
                 {"degrees", degrees},
                 {"pairing", pairing}};
  emit_report(ctx, o.report,
              envelope("validate", "validate", in.digest, {{"input", o.input}}, std::nullopt, result));
  return ok ? kOk : kDomain;
}

// ---------------------------------------------------------------------------
// wl
// ---------------------------------------------------------------------------

struct WlOptions {
  std::string input;
  std::string output;
  std::string report;
};

int run_wl(Context& ctx, const WlOptions& o) {
  Input in = load_input(o.input);
  WlResult wl = wl_refine(in.matrix);
  ColorMatrix m = ctx.canonical ? canonical_renumbering(wl.matrix) : wl.matrix;
  Configuration closure = Configuration::analyze(m);
  if (closure.coherent() != Tri::yes)
    throw InvariantError("WL output is not coherent");
  std::string text = format_ccm(m);
  write_bytes(ctx, o.output.empty() ? "-" : o.output, text);
  if (!o.output.empty())
    human(ctx, o.report) << "rank " << in.matrix.rank() << " -> " << m.rank() << " in "
                         << wl.rounds << " rounds\n";
  json result = {{"input_rank", in.matrix.rank()},
                 {"output_rank", m.rank()},
                 {"rounds", wl.rounds},
                 {"ranks", wl.ranks},
                 {"coherent", true},
                 {"output_digest", content_digest(text)}};
  json params = {{"input", o.input}, {"output", o.output}, {"canonical", ctx.canonical}};
  emit_report(ctx, o.report, envelope("wl", "wl", in.digest, params, std::nullopt, result));
  return kOk;
}

// ---------------------------------------------------------------------------
// refine
// ---------------------------------------------------------------------------

struct RefineOptions {
  std::string input;
  std::vector<Vertex> set;
  std::string report;
};

int run_refine(Context& ctx, const RefineOptions& o) {
  Input in = load_input(o.input);
  const std::size_t n = in.matrix.size();
  for (Vertex v : o.set)
    if (v >= n)
      throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n) + ")");
  RefinementResult r = refine_individualized(in.matrix, o.set);
  const bool discrete = r.coloring.discrete();
  json bound = nullptr;
  if (discrete)
    bound = base_size_bound(in.matrix, o.set).bound.str();
  human(ctx, o.report) << "classes=" << r.coloring.classes << " rounds=" << r.trace.rounds
                       << " discrete=" << (discrete ? "true" : "false") << "\n";
  json result = {{"set", o.set},
                 {"trace", to_json(r.trace)},
                 {"classes", r.coloring.classes},
                 {"discrete", discrete},
                 {"coloring", r.coloring.cls},
                 {"bound", bound}};
  emit_report(ctx, o.report,
              envelope("refine", "refine", in.digest, {{"input", o.input}, {"individualize", o.set}},
                       std::nullopt, result));
  return kOk;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
  std::string input;
  std::string report;
  std::uint64_t seed = 7;
};

int run_analyze(Context& ctx, const AnalyzeOptions& o) {
  Input in = load_input(o.input);
  Configuration cfg = Configuration::analyze(in.matrix);
  require_coherent(cfg);
  ParameterProfile pr = profile(cfg);
  std::optional<std::uint64_t> zeta;
  for (std::size_t c = 0; c < pr.r; ++c)
    if (c != pr.diagonal)
      zeta = zeta ? std::min(*zeta, pr.distinguishing[c]) : pr.distinguishing[c];

  json distances = nullptr;
  if (pr.primitive == Tri::yes) {
    SamplingOptions so;
    so.seed = o.seed;
    distances = json::object();
    for (std::size_t c = 0; c < pr.r; ++c)
      if (c != pr.diagonal) {
        json row = json::array();
        for (auto d : color_distances(cfg, static_cast<Color>(c), so))
          row.push_back(d == kUnreachable ? json(nullptr) : json(d));
        distances[std::to_string(c)] = row;
      }
  }
  ExceptionalMatch ex = recognize_exceptional(cfg);

  std::ostream& h = human(ctx, o.report);
  h << "n=" << pr.n << " r=" << pr.r << " rho=" << pr.rho << " dominant="
    << (pr.dominant ? std::to_string(*pr.dominant) : "none")
    << " mu=" << (pr.mu ? std::to_string(*pr.mu) : "-")
    << " zeta=" << (zeta ? std::to_string(*zeta) : "-") << " exceptional=" << ex.describe()
    << "\n";

  json result = to_json(pr);
  result["zeta"] = zeta ? json(*zeta) : json(nullptr);
  result["color_distances"] = distances;
  result["exceptional"] = to_json(ex);
  emit_report(ctx, o.report,
              envelope("analyze", "analyze", in.digest, {{"input", o.input}}, o.seed, result));
  return kOk;
}

// ---------------------------------------------------------------------------
// geometry
// ---------------------------------------------------------------------------

struct GeometryCliOptions {
  std::string input;
  std::string report;
  GeometryOptions geo;
};

int run_geometry(Context& ctx, const GeometryCliOptions& o) {
  Input in = load_input(o.input);
  Configuration cfg = Configuration::analyze(in.matrix);
  require_coherent(cfg);
  profile(cfg);
  GeometryResult g = assemble_geometry(cfg, o.geo);
  json result = to_json(g);
  std::ostream& h = human(ctx, o.report);
  if (g.geometry) {
    TwoCliqueClassification tc = two_clique_characterization(cfg, *g.geometry);
    result["two_clique"] = to_json(tc);
    h << "geometry: " << g.geometry->cliques.size() << " cliques, worst deviation "
      << g.geometry->worst_deviation << ", " << tc.verdict << "\n";
  } else {
    result["two_clique"] = nullptr;
    h << "no geometry: stage " << to_string(g.stage) << ": " << g.message << "\n";
  }
  json params = {{"input", o.input},
                 {"tolerance", o.geo.tolerance},
                 {"samples", o.geo.samples},
                 {"exhaustive", o.geo.exhaustive}};
  emit_report(ctx, o.report, envelope("geometry", "geometry", in.digest, params, o.geo.seed, result));
  return g.ok() ? kOk : kDomain;
}

// ---------------------------------------------------------------------------
// goodtriples
// ---------------------------------------------------------------------------

struct TripleOptions {
  std::string input;
  std::string report;
  Color i = 0, j = 0;
  Vertex u = 0, v = 0;
};

int run_goodtriples(Context& ctx, const TripleOptions& o) {
  Input in = load_input(o.input);
  Configuration cfg = Configuration::analyze(in.matrix);
  require_coherent(cfg);
  ParameterProfile pr = profile(cfg);
  GoodTripleQuery q = count_good_triples(cfg, pr, o.i, o.j, o.u, o.v);
  human(ctx, o.report) << "Q(" << o.i << "," << o.j << ") at u=" << o.u << ": " << q.q_count
                       << ", good for v=" << o.v << ": " << q.good_count << "\n";
  json params = {{"input", o.input}, {"i", o.i}, {"j", o.j}, {"u", o.u}, {"v", o.v}};
  emit_report(ctx, o.report,
              envelope("goodtriples", "goodtriples", in.digest, params, std::nullopt, to_json(q)));
  return kOk;
}

// ---------------------------------------------------------------------------
// split
// ---------------------------------------------------------------------------

struct SplitCliOptions {
  std::string input;
  std::string report;
  std::string strategy = "auto";
  SplitOptions split;
  Color i = 0, j = 0;
  CLI::Option* i_opt = nullptr;
  CLI::Option* j_opt = nullptr;
};

int run_split(Context& ctx, const SplitCliOptions& o) {
  Input in = load_input(o.input);
  Configuration cfg = Configuration::analyze(in.matrix);
  require_coherent(cfg);

  SplitReport rep;
  json params = {{"input", o.input},
                 {"strategy", o.strategy},
                 {"beta", o.split.beta},
                 {"rounds", o.split.rounds},
                 {"attempts_per_level", o.split.attempts_per_level},
                 {"tolerance", o.split.tolerance}};
  if (o.strategy == "auto") {
    rep = auto_split(cfg, o.split);
  } else if (o.strategy == "dist") {
    rep = split_by_distinguishing(cfg, o.split);
  } else if (o.strategy == "goodtriples") {
    ParameterProfile pr = profile(cfg);
    std::optional<Color> smallest;
    for (std::size_t c = 0; c < pr.r; ++c)
      if (pr.nondominant(static_cast<Color>(c)) &&
          (!smallest || pr.degrees[c] < pr.degrees[*smallest]))
        smallest = static_cast<Color>(c);
    if (!smallest)
      throw PreconditionError("no nondominant color");
    Color i = o.i_opt->count() ? o.i : *smallest;
    Color j = o.j_opt->count() ? o.j : i;
    params["i"] = i;
    params["j"] = j;
    rep = split_by_good_triples(cfg, i, j, o.split);
  } else if (o.strategy == "twoclique") {
    GeometryOptions go;
    go.tolerance = o.split.tolerance;
    GeometryResult g = assemble_geometry(cfg, go);
    if (!g.geometry)
      throw PreconditionError(std::string("no clique geometry (") + to_string(g.stage) + ")");
    rep = split_two_clique(cfg, *g.geometry, o.split);
  } else {
    throw UsageError("unknown strategy '" + o.strategy + "'");
  }

  const bool verified = rep.splits && completely_splits(cfg, rep.set);
  if (rep.splits && !verified)
    throw InvariantError("reported splitting set does not split on re-verification");
  json result = to_json(rep);
  result["verified"] = verified;

  std::ostream& h = human(ctx, o.report);
  h << rep.strategy << ": " << to_string(rep.outcome);
  if (rep.outcome == SplitOutcome::split)
    h << " |S|=" << rep.set.size();
  if (rep.exceptional)
    h << " " << rep.exceptional->describe();
  h << "\n";
  emit_report(ctx, o.report, envelope("split", "split", in.digest, params, o.split.seed, result));
  switch (rep.outcome) {
    case SplitOutcome::split: return kOk;
    case SplitOutcome::exceptional: return kDomain;
    default: return kExhausted;
  }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::string report;
  std::vector<std::string> lemmas{"spheres", "diam", "identities"};
  double epsilon = 0.1;
  SamplingOptions sampling;
};

int run_verify(Context& ctx, const VerifyOptions& o) {
  for (const auto& l : o.lemmas)
    if (l != "spheres" && l != "diam" && l != "identities")
      throw UsageError("unknown lemma group '" + l + "'");
  Input in = load_input(o.input);
  Configuration cfg = Configuration::analyze(in.matrix);
  require_coherent(cfg);
  if (!cfg.is_pcc())
    throw PreconditionError("verification requires a primitive coherent configuration");

  auto wants = [&](const char* g) {
    return std::find(o.lemmas.begin(), o.lemmas.end(), g) != o.lemmas.end();
  };
  std::vector<std::pair<std::string, VerificationReport>> groups;
  if (wants("spheres"))
    groups.emplace_back("spheres", check_growth_of_spheres(cfg, o.sampling));
  if (wants("diam"))
    groups.emplace_back("diam", check_diameter_lemma(cfg, o.epsilon, o.sampling));
  if (wants("identities"))
    groups.emplace_back("identities", check_identities(cfg, o.sampling));

  std::ostream& h = human(ctx, o.report);
  json checks = json::array();
  std::size_t violations = 0;
  for (const auto& [group, rep] : groups) {
    violations += rep.violations();
    for (const auto& c : rep.checks) {
      json cj = to_json(c);
      cj["group"] = group;
      checks.push_back(std::move(cj));
      h << group << "/" << c.name << ": " << to_string(c.status);
      if (!c.note.empty())
        h << " (" << c.note << ")";
      h << "\n";
      for (const auto& w : c.witnesses)
        h << "  " << w << "\n";
    }
  }
  h << (violations == 0 ? "all checks passed" : std::to_string(violations) + " violation(s)")
    << "\n";
  json params = {{"input", o.input},
                 {"lemmas", o.lemmas},
                 {"epsilon", o.epsilon},
                 {"samples", o.sampling.samples},
                 {"exhaustive_limit", o.sampling.exhaustive_limit}};
  json result = {{"checks", checks}, {"violations", violations}, {"ok", violations == 0}};
  emit_report(ctx, o.report, envelope("verify", "verify", in.digest, params, o.sampling.seed, result));
  return violations == 0 ? kOk : kInvariant;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

struct CorpusOptions {
  std::string out_dir;
  std::string report;
  std::uint64_t seed = 0;
  std::size_t random_count = 50;
};

int run_corpus(Context& ctx, const CorpusOptions& o) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec)
    throw IoError("cannot create " + o.out_dir + ": " + ec.message());

  std::vector<std::pair<std::string, ColorMatrix>> members;
  for (std::size_t m = 5; m <= 12; ++m)
    members.emplace_back("T" + std::to_string(m), triangular(m));
  for (std::size_t m = 3; m <= 10; ++m)
    members.emplace_back("L2_" + std::to_string(m), lattice(m));
  for (std::size_t m = 6; m <= 10; ++m)
    members.emplace_back("J" + std::to_string(m) + "_3", johnson(m, 3));
  for (std::size_t m = 3; m <= 6; ++m)
    members.emplace_back("H3_" + std::to_string(m), hamming(3, m));
  CounterRng rng(o.seed, 0x636f7270);
  for (std::size_t k = 0; k < o.random_count; ++k) {
    const std::size_t n = 10 + rng.below(31);
    const double p = 0.2 + 0.6 * rng.uniform();
    GraphInput g = random_graph(n, p, CounterRng::mix(o.seed + k));
    char name[32];
    std::snprintf(name, sizeof name, "random_%02zu", k);
    members.emplace_back(name, wl_refine(from_graph(g)).matrix);
  }

  json entries = json::array();
  for (auto& [name, m] : members) {
    if (ctx.canonical)
      m = canonical_renumbering(m);
    const std::string text = format_ccm(m);
    const std::string file = name + ".ccm";
    write_bytes(ctx, (fs::path(o.out_dir) / file).string(), text);
    Configuration cfg = Configuration::analyze(m);
    entries.push_back({{"name", name},
                       {"file", file},
                       {"n", m.size()},
                       {"rank", m.rank()},
                       {"digest", content_digest(text)},
                       {"coherent", tri_json(cfg.coherent())},
                       {"homogeneous", tri_json(cfg.homogeneous())},
                       {"primitive", tri_json(cfg.primitive())}});
  }
  json params = {{"out", o.out_dir}, {"random_count", o.random_count}, {"canonical", ctx.canonical}};
  json report = envelope("corpus", "corpus", std::nullopt, params, o.seed, {{"members", entries}});
  write_bytes(ctx, (fs::path(o.out_dir) / "manifest.json").string(), report.dump(2) + "\n");
  emit_report(ctx, o.report, report);
  human(ctx, o.report) << "wrote " << entries.size() << " members to " << o.out_dir << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent configuration toolkit", "cohere"};
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Context ctx{out, err};
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  app.add_flag("--timing", ctx.timing, "Include wall-clock timing in reports");
  app.add_flag("--canonical", ctx.canonical, "Canonically renumber colors of written matrices");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a configuration");
  gen_cmd->add_option("family", gen.family, "Family name")->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("-o,--output", gen.output, "Output .ccm (default stdout)");
  gen_cmd->add_option("--report", gen.report, "JSON report path");
  gen.seed_opt = gen_cmd->add_option("--seed", gen.seed, "Seed for random families");

  FileOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check axioms and coherence");
  validate_cmd->add_option("input", validate.input, "Input .ccm")->required();
  validate_cmd->add_option("--report", validate.report, "JSON report path");

  WlOptions wl;
  auto* wl_cmd = app.add_subcommand("wl", "Weisfeiler-Leman closure");
  wl_cmd->add_option("input", wl.input, "Input .ccm")->required();
  wl_cmd->add_option("-o,--output", wl.output, "Output .ccm (default stdout)");
  wl_cmd->add_option("--report", wl.report, "JSON report path");

  RefineOptions refine;
  auto* refine_cmd = app.add_subcommand("refine", "Individualize and refine");
  refine_cmd->add_option("input", refine.input, "Input .ccm")->required();
  refine_cmd->add_option("--individualize", refine.set, "Comma separated vertices")
      ->delimiter(',');
  refine_cmd->add_option("--report", refine.report, "JSON report path");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Parameter profile");
  analyze_cmd->add_option("input", analyze.input, "Input .ccm")->required();
  analyze_cmd->add_option("--report", analyze.report, "JSON report path");
  analyze_cmd->add_option("--seed", analyze.seed, "Sampling seed");

  GeometryCliOptions geometry;
  auto* geometry_cmd = app.add_subcommand("geometry", "Assemble a clique geometry");
  geometry_cmd->add_option("input", geometry.input, "Input .ccm")->required();
  geometry_cmd->add_option("--report", geometry.report, "JSON report path");
  geometry_cmd->add_option("--tolerance", geometry.geo.tolerance, "Uniformity tolerance");
  geometry_cmd->add_option("--seed", geometry.geo.seed, "Sampling seed");
  geometry_cmd->add_option("--samples", geometry.geo.samples, "Sampled probe vertices");
  geometry_cmd->add_flag("--exhaustive", geometry.geo.exhaustive, "Probe every vertex");

  TripleOptions triples;
  auto* triples_cmd = app.add_subcommand("goodtriples", "Count good triples");
  triples_cmd->add_option("input", triples.input, "Input .ccm")->required();
  triples_cmd->add_option("-i", triples.i, "Color i")->required();
  triples_cmd->add_option("-j", triples.j, "Color j")->required();
  triples_cmd->add_option("-u", triples.u, "Vertex u")->required();
  triples_cmd->add_option("-v", triples.v, "Vertex v")->required();
  triples_cmd->add_option("--report", triples.report, "JSON report path");

  SplitCliOptions split;
  auto* split_cmd = app.add_subcommand("split", "Find a completely splitting set");
  split_cmd->add_option("input", split.input, "Input .ccm")->required();
  split_cmd->add_option("--strategy", split.strategy, "auto|dist|goodtriples|twoclique")
      ->check(CLI::IsMember({"auto", "dist", "goodtriples", "twoclique"}));
  split_cmd->add_option("--seed", split.split.seed, "Seed")->required();
  split_cmd->add_option("--beta", split.split.beta, "Initial sampling factor");
  split_cmd->add_option("--rounds", split.split.rounds, "Escalation levels");
  split_cmd->add_option("--attempts", split.split.attempts_per_level, "Attempts per level");
  split_cmd->add_option("--tolerance", split.split.tolerance, "Geometry tolerance");
  split.i_opt = split_cmd->add_option("-i", split.i, "Color i for goodtriples");
  split.j_opt = split_cmd->add_option("-j", split.j, "Color j for goodtriples");
  split_cmd->add_option("--report", split.report, "JSON report path");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the lemma checks");
  verify_cmd->add_option("input", verify.input, "Input .ccm")->required();
  verify_cmd->add_option("--lemmas", verify.lemmas, "spheres,diam,identities")
      ->delimiter(',');
  verify_cmd->add_option("--epsilon", verify.epsilon, "Diameter lemma slack");
  verify_cmd->add_option("--seed", verify.sampling.seed, "Sampling seed");
  verify_cmd->add_option("--samples", verify.sampling.samples, "Sampled sources");
  verify_cmd->add_option("--exhaustive-limit", verify.sampling.exhaustive_limit,
                         "Check every source up to this n");
  verify_cmd->add_option("--report", verify.report, "JSON report path");

  CorpusOptions corpus;
  auto* corpus_cmd = app.add_subcommand("corpus", "Write the standard corpus");
  corpus_cmd->add_option("--out", corpus.out_dir, "Output directory")->required();
  corpus_cmd->add_option("--seed", corpus.seed, "Seed for the random members")->required();
  corpus_cmd->add_option("--random", corpus.random_count, "Random members");
  corpus_cmd->add_option("--report", corpus.report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (threads > 0)
    set_thread_count(threads);

  try {
    if (*gen_cmd) return run_gen(ctx, gen);
    if (*validate_cmd) return run_validate(ctx, validate);
    if (*wl_cmd) return run_wl(ctx, wl);
    if (*refine_cmd) return run_refine(ctx, refine);
    if (*analyze_cmd) return run_analyze(ctx, analyze);
    if (*geometry_cmd) return run_geometry(ctx, geometry);
    if (*triples_cmd) return run_goodtriples(ctx, triples);
    if (*split_cmd) return run_split(ctx, split);
    if (*verify_cmd) return run_verify(ctx, verify);
    if (*corpus_cmd) return run_corpus(ctx, corpus);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}

}  // namespace cohere::cli
