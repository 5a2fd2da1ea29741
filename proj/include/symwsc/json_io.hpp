#pragma once

#include "symwsc/oracle.hpp"
#include "symwsc/pipeline.hpp"

#include <json.hpp>

namespace symwsc {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "symwsc";
inline constexpr const char* kToolVersion = "0.1.0";

// serializers
json to_json(const Feasibility& f);
json to_json(const KSubset& s);
json to_json(const Collection& c);
json to_json(const SizePrediction& p);
json to_json(const StageTrace& st);
json to_json(const GeneratorTrace& t);
json to_json(const Clique& c);
json to_json(const TilingEdge& e);
json to_json(const PlabicTiling& t);
json to_json(const PlabicGraph& g);
json to_json(const TilingCertificate& c);
json to_json(const GraphCertificate& c);
json to_json(const WeaveGraph& w);
json to_json(const WeaveBuild& wb);
json to_json(const WeaveCertificate& c);
json to_json(const BraidWord& b);
json to_json(const PipelineReport& r);

// parsers (validating; throw InputError on malformed payloads)
Feasibility feasibility_from_json(const json& j);
KSubset subset_from_json(const json& j, int n);
Collection collection_from_json(const json& j);
GeneratorTrace generator_trace_from_json(const json& j);
PlabicTiling tiling_from_json(const json& j);
PlabicGraph graph_from_json(const json& j);
WeaveGraph weave_from_json(const json& j);
WeaveBuild weave_build_from_json(const json& j);
PipelineReport pipeline_from_json(const json& j);

/// Wrap a payload in the versioned result envelope. The timing field is the
/// only non-deterministic entry and sits outside the payload.
json make_envelope(const std::string& kind, const std::string& command, json input,
                   json payload, double timing_ms);

/// Parse text to json with InputError on failure; when the value is an
/// envelope, returns its payload (with the envelope kind in *kind_out).
json parse_payload(const std::string& text, std::string* kind_out = nullptr);

std::string dump_canonical(const json& j);

} // namespace symwsc
