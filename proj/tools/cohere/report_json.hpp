#ifndef COHERE_TOOLS_REPORT_JSON_HPP_
#define COHERE_TOOLS_REPORT_JSON_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cohere/analysis.hpp"
#include "cohere/cliques.hpp"
#include "cohere/configuration.hpp"
#include "cohere/refinement.hpp"
#include "cohere/splitter.hpp"

namespace cohere::cli {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a 64 of the bytes, as "fnv1a64:<16 hex digits>".
std::string content_digest(std::string_view bytes);

json tri_json(Tri t);
json to_json(const AxiomViolation& v);
json to_json(const CoherenceFailure& f);
json to_json(const RefinementTrace& t);
json to_json(const ParameterProfile& p);
json to_json(const CheckOutcome& c);
json to_json(const GeometryResult& g);
json to_json(const CliqueGeometry& g);
json to_json(const TwoCliqueClassification& t);
json to_json(const FamilyMatch& f);
json to_json(const GoodTripleQuery& q);
json to_json(const ExceptionalMatch& e);
json to_json(const SplitReport& r);

// The common envelope shared by every report.
json envelope(std::string_view kind, std::string_view command,
              const std::optional<std::string>& digest, json parameters,
              std::optional<std::uint64_t> seed, json result);

}  // namespace cohere::cli

#endif  // COHERE_TOOLS_REPORT_JSON_HPP_
