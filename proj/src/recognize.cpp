#include "cohere/splitter.hpp"

namespace cohere {

const char* to_string(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::complete: return "complete";
    case ExceptionalKind::triangular: return "triangular";
    case ExceptionalKind::lattice: return "lattice";
    default: return "none";
  }
}

std::string ExceptionalMatch::describe() const {
  if (kind == ExceptionalKind::none)
    return "none";
  std::string s = std::string(to_string(kind)) + "(" + std::to_string(parameter) + ")";
  return complemented ? "complement of " + s : s;
}

ExceptionalMatch recognize_exceptional(const Configuration& cfg, std::size_t iso_limit) {
  if (!cfg.has_constants() || cfg.homogeneous() != Tri::yes)
    throw PreconditionError("recognition requires a homogeneous coherent configuration");
  ExceptionalMatch out;
  if (cfg.rank() == 2) {
    out.kind = ExceptionalKind::complete;
    out.parameter = cfg.size();
    out.certified = Tri::yes;
    return out;
  }
  if (cfg.rank() != 3)
    return out;

  auto matches = match_line_graph_families(cfg, iso_limit);
  for (auto& f : matches)
    if (f.certified == Tri::yes) {
      out.kind = f.family == "triangular" ? ExceptionalKind::triangular : ExceptionalKind::lattice;
      out.parameter = f.parameter;
      out.complemented = f.complemented;
      out.certified = Tri::yes;
      out.isomorphism = std::move(f.isomorphism);
      return out;
    }
  for (auto& f : matches)
    if (f.certified == Tri::unchecked) {
      out.kind = f.family == "triangular" ? ExceptionalKind::triangular : ExceptionalKind::lattice;
      out.parameter = f.parameter;
      out.complemented = f.complemented;
      out.note = "parameter match only";
      return out;
    }
  if (!matches.empty()) {
    out.certified = Tri::no;
    out.note = "pseudo-" + matches.front().family + " (" + std::to_string(matches.front().parameter) +
               "): parameters match but no isomorphism exists";
  }
  return out;
}

}  // namespace cohere
