#include "report_json.hpp"

#include <cstdio>

namespace cohere::cli {
namespace {

json pair_json(const VertexPair& p) { return json::array({p.first, p.second}); }

json metrics_json(const std::vector<std::pair<std::string, double>>& metrics) {
  json out = json::object();
  for (const auto& [name, value] : metrics)
    out[name] = value;
  return out;
}

json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json tri_json(Tri t) {
  switch (t) {
    case Tri::yes: return true;
    case Tri::no: return false;
    default: return nullptr;
  }
}

json to_json(const AxiomViolation& v) {
  return {{"axiom", v.axiom == Axiom::pairing ? "pairing" : "diagonal_separation"},
          {"color", v.color},
          {"first", pair_json(v.first)},
          {"second", pair_json(v.second)},
          {"description", v.describe()}};
}

json to_json(const CoherenceFailure& f) {
  return {{"i", f.i},
          {"j", f.j},
          {"k", f.k},
          {"representative", pair_json(f.representative)},
          {"representative_count", f.representative_count},
          {"witness", pair_json(f.witness)},
          {"witness_count", f.witness_count},
          {"description", f.describe()}};
}

json to_json(const RefinementTrace& t) {
  return {{"initial_classes", t.initial_classes},
          {"rounds", t.rounds},
          {"class_counts", t.class_counts},
          {"stable", t.stable}};
}

json to_json(const ParameterProfile& p) {
  json lambda = json::array();
  for (const auto& l : p.lambda)
    lambda.push_back(optional_json(l));
  return {{"n", p.n},
          {"r", p.r},
          {"degrees", p.degrees},
          {"pairing", p.pairing},
          {"diagonal", p.diagonal},
          {"max_color", p.max_color},
          {"renumbering", p.renumbering},
          {"rho", p.rho},
          {"dominant", p.dominant ? json(*p.dominant) : json(nullptr)},
          {"dominant_boundary", p.dominant_boundary},
          {"dominant_symmetric", p.dominant_symmetric},
          {"mu", optional_json(p.mu)},
          {"lambda", lambda},
          {"distinguishing", p.distinguishing},
          {"primitive", tri_json(p.primitive)}};
}

json to_json(const CheckOutcome& c) {
  return {{"name", c.name},
          {"status", to_string(c.status)},
          {"instances", c.instances},
          {"witnesses", c.witnesses},
          {"note", c.note},
          {"metrics", metrics_json(c.metrics)}};
}

json to_json(const CliqueGeometry& g) {
  json uniformity = json::array();
  for (const auto& u : g.uniformity)
    uniformity.push_back({{"color", u.color},
                          {"lambda", u.lambda},
                          {"worst_deviation", u.worst_deviation},
                          {"zero_count", u.zero_count},
                          {"cliques_per_vertex_min", u.cliques_per_vertex_min},
                          {"cliques_per_vertex_max", u.cliques_per_vertex_max}});
  return {{"cliques", g.cliques},
          {"incidence", g.incidence},
          {"color_groups", g.color_groups},
          {"uniformity", uniformity},
          {"worst_deviation", g.worst_deviation}};
}

json to_json(const GeometryResult& g) {
  return {{"ok", g.ok()},
          {"stage", to_string(g.stage)},
          {"message", g.message},
          {"color_groups", g.color_groups},
          {"geometry", g.geometry ? to_json(*g.geometry) : json(nullptr)}};
}

json to_json(const FamilyMatch& f) {
  return {{"family", f.family},
          {"parameter", f.parameter},
          {"edge_color", f.edge_color},
          {"complemented", f.complemented},
          {"certified", tri_json(f.certified)},
          {"isomorphism", f.isomorphism ? json(*f.isomorphism) : json(nullptr)}};
}

json to_json(const TwoCliqueClassification& t) {
  json matches = json::array();
  for (const auto& m : t.matches)
    matches.push_back(to_json(m));
  auto opt_bool = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  return {{"all_in_two", t.all_in_two},
          {"rank", t.rank},
          {"matches", matches},
          {"nondominant_paired", opt_bool(t.nondominant_paired)},
          {"cliques_pairwise_meet", opt_bool(t.cliques_pairwise_meet)},
          {"verdict", t.verdict}};
}

json to_json(const GoodTripleQuery& q) {
  return {{"i", q.i},
          {"j", q.j},
          {"u", q.u},
          {"v", q.v},
          {"q_count", q.q_count},
          {"good_count", q.good_count},
          {"candidates_per_w", q.candidates_per_w}};
}

json to_json(const ExceptionalMatch& e) {
  return {{"kind", to_string(e.kind)},
          {"parameter", e.parameter},
          {"complemented", e.complemented},
          {"certified", tri_json(e.certified)},
          {"isomorphism", e.isomorphism ? json(*e.isomorphism) : json(nullptr)},
          {"note", e.note},
          {"description", e.describe()}};
}

json to_json(const SplitReport& r) {
  json log = json::array();
  for (const auto& a : r.log)
    log.push_back({{"strategy", a.strategy},
                   {"index", a.index},
                   {"parameter", a.parameter},
                   {"set_size", a.set_size},
                   {"classes", a.classes},
                   {"splits", a.splits}});
  return {{"strategy", r.strategy},
          {"outcome", to_string(r.outcome)},
          {"set", r.set},
          {"set_size", r.set.size()},
          {"splits", r.splits},
          {"final_classes", r.final_classes},
          {"trace", to_json(r.trace)},
          {"bound", r.splits ? json(r.bound.str()) : json(nullptr)},
          {"seed", r.seed},
          {"attempts", r.attempts},
          {"log", log},
          {"decisions", r.decisions},
          {"exceptional", r.exceptional ? to_json(*r.exceptional) : json(nullptr)},
          {"metrics", metrics_json(r.metrics)}};
}

json envelope(std::string_view kind, std::string_view command,
              const std::optional<std::string>& digest, json parameters,
              std::optional<std::uint64_t> seed, json result) {
  return {{"kind", kind},
          {"tool_version", kToolVersion},
          {"input_digest", digest ? json(*digest) : json(nullptr)},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"seed", seed ? json(*seed) : json(nullptr)},
          {"result", std::move(result)}};
}

}  // namespace cohere::cli
