#pragma once

#include "plslab/engine/search.hpp"
#include "plslab/engine/transition_graph.hpp"
#include "plslab/problems/instance.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/reductions/reduction.hpp"
#include "plslab/verify/checks.hpp"

#include <json.hpp>

#include <string>

namespace plslab::cli {

using Json = nlohmann::ordered_json;

// Every weight, radicand and rational travels as a decimal string. Malformed documents raise
// ValidationError.

Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& doc);

Json solution_to_json(const ProblemKind& kind, const Partition& solution);
/// Reads a solution file; `kind` and `n` come from the instance it belongs to.
Partition solution_from_json(const Json& doc, const ProblemKind& kind, int n);

Json cert_to_json(const ReductionCert& cert);
ReductionCert cert_from_json(const Json& doc);
Json composed_cert_to_json(const ComposedCert& cert);
ComposedCert composed_cert_from_json(const Json& doc);

Json trace_to_json(const Problem& problem, const SearchTrace& trace);

Json transition_graph_to_json(const TransitionGraph& tg);
std::string transition_graph_to_dot(const TransitionGraph& tg);

Json preservation_to_json(const PreservationReport& rep);
Json tightness_to_json(const TightnessReport& rep);
Json identities_to_json(const IdentityReport& rep);

/// Compact-but-readable rendering used for every file the CLI writes.
std::string dump(const Json& doc);
Json parse_json(const std::string& text);

} // namespace plslab::cli
