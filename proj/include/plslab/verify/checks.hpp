#pragma once

#include "plslab/core/partition.hpp"
#include "plslab/engine/search.hpp"
#include "plslab/engine/transition_graph.hpp"
#include "plslab/problems/instance.hpp"
#include "plslab/reductions/reduction.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace plslab {

/// FNV-1a over a canonical text rendering of the instance, as 16 hex digits.
std::string instance_digest(const Instance& instance);

struct PreservationViolation {
    Partition target_sink;
    Partition mapped;
    Move improving;
};

struct PreservationReport {
    std::string reduction;
    std::string digest;
    std::uint64_t sinks_checked = 0;
    std::vector<PreservationViolation> violations;
    /// r6 with reduced matching size / scale.
    bool oracle_mode = false;
    /// Sinks reached by sampling rather than exhaustive enumeration.
    bool sampled = false;
    /// Random target solutions drawn when sampled.
    std::uint64_t solutions_sampled = 0;

    bool ok() const { return violations.empty(); }
};

/// Every target sink must map under g to a source sink.
PreservationReport check_preservation(ReductionId id, const Instance& source, std::uint64_t cap = kDefaultCap,
                                      const ReductionOptions& options = {});
PreservationReport check_chain_preservation(const Instance& source, const std::vector<ReductionId>& path,
                                            std::uint64_t cap = kDefaultCap, const ReductionOptions& options = {});
/// Preservation for an already built target and an arbitrary map g.
PreservationReport check_preservation_with(const Instance& source, const Instance& target,
                                           const std::function<Partition(const Partition&)>& g,
                                           std::uint64_t cap = kDefaultCap);

/// r6 at faithful constants: `samples` random target solutions are tested directly (a sink
/// outside R, or a sink whose image is not a source sink, is a violation) and the first
/// `searches` of them are additionally driven to a sink by first-improvement search.
PreservationReport check_r6_sampled(const Instance& source, std::uint64_t samples, std::uint64_t searches,
                                    std::uint64_t seed);

struct TightnessReport {
    std::string reduction;
    std::string digest;
    std::size_t source_nodes = 0;
    std::size_t target_nodes = 0;
    std::size_t reasonable_nodes = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks that target sinks lie in R, that g(R) covers the source solutions, and that every
/// R-to-R path (interior outside R) ends at a g-equal or g-adjacent solution. For r3, r4, r5,
/// r7 to r11 it also checks that g maps the arcs out of each reasonable solution one-to-one
/// onto the source arcs and, where R is a proper subset, that leaving R strictly worsens the
/// objective. r1 is not tight and is expected to fail.
TightnessReport check_tightness(ReductionId id, const Instance& source, std::uint64_t cap = kDefaultCap,
                                const ReductionOptions& options = {});

struct DistinctResult {
    bool distinct = true;
    std::optional<Partition> cut;
    std::optional<int> vertex;
};

/// Exhaustive over all 2^n cuts: does every flip change the cut weight?
DistinctResult check_distinct_costs(const WeightedGraph& g, std::uint64_t cap = kDefaultCap);

enum class VertexType { TypeI, TypeII, TypeIII, Other };

std::string vertex_type_name(VertexType t);

struct VertexTypeReport {
    int vertex = 0;
    /// a ≥ b ≥ c ≥ d, missing edges as 0.
    std::array<Int, 4> sorted_incident;
    VertexType vtype = VertexType::Other;
};

VertexTypeReport classify_vertex(const WeightedGraph& g, int v);
/// Over all cuts of g: does every flip of v change the cut weight? Throws ValidationError
/// for vertices of type Other.
bool check_typed_flip_distinct(const WeightedGraph& g, int v, std::uint64_t cap = kDefaultCap);

struct IdentityReport {
    std::string reduction;
    std::string digest;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Exact closed-form checks of the reduction on every solution of the source instance
/// (cost identities, witness geometry, construction constants).
IdentityReport check_identities(ReductionId id, const Instance& source, const ReductionOptions& options = {});

struct RandomSpec {
    ProblemKind kind;
    int n = 0;
    Int weight_max = 10;
    std::uint64_t seed = 0;
    /// Graph kinds: every vertex has odd degree (used for chain sources that r1 leaves alone).
    bool odd_degrees = false;
    /// NAE kinds: clause weights in [0, weight_max] instead of [-weight_max, weight_max].
    bool nonnegative = false;
};

/// Reproducible random instance that passes validate_instance.
Instance random_instance(const RandomSpec& spec);
Instance random_instance(ProblemKind kind, int n, const Int& weight_max, std::uint64_t seed);

/// Source instance of the given reduction for seed `seed`: Distinct Max Cut-5 for r2,
/// non-negative formulas for r5, odd-degree graphs when `odd_degrees` is set (chain sources).
Instance corpus_source(ReductionId id, int n, std::uint64_t seed, bool odd_degrees = false);

/// Random degree-≤4 weighted graph for the vertex-type experiments.
WeightedGraph random_degree4_graph(int n, const Int& weight_max, std::uint64_t seed);

} // namespace plslab
