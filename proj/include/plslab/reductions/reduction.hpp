#pragma once

#include "plslab/core/partition.hpp"
#include "plslab/core/rat.hpp"
#include "plslab/problems/instance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plslab {

enum class ReductionId { R1, R2, R3, R4, R5Max, R5Min, R6, R7, R8, R9, R10, R11 };

std::string reduction_name(ReductionId id);
/// Accepts "r1".."r11", "r5max", "r5min"; "r5" means "r5max".
ReductionId parse_reduction_id(std::string_view name);
std::vector<ReductionId> parse_reduction_path(std::string_view comma_separated);
ProblemTag reduction_source(ReductionId id);
ProblemTag reduction_target(ReductionId id);

/// Deliberate parameter corruptions used as negative controls for the checkers.
enum class Corruption {
    None,
    /// r2 with L := M.
    GadgetLEqualsM,
    /// r9 with signed incidence entries.
    SignedEmbedding,
    /// r6 with matching weight 1.
    UnitMatchingWeight,
    /// r2 certificate reading level-3 variables as the cut.
    WrongLevelTags,
};

std::string corruption_name(Corruption c);
Corruption parse_corruption(std::string_view name);

struct ReductionOptions {
    /// r2 normally rejects inputs with a zero-delta flip.
    bool allow_non_distinct = false;
    /// r6 oracle mode: matching size m instead of n^4.
    std::optional<Int> r6_matching_size;
    /// r6 oracle mode: scale s instead of n^9 in the auxiliary weights.
    std::optional<Int> r6_scale;
    /// Constant C of the Euclidean embedding (C >= 2).
    Int r10_scale = 2;
    Corruption corruption = Corruption::None;
};

enum class VarRole { Level1, Level2, Level3 };

struct VarTag {
    VarRole role = VarRole::Level1;
    /// Vertex id for levels 1 and 2, index i of a_i for level 3.
    int index = 0;

    friend bool operator==(const VarTag& a, const VarTag& b) = default;
};

struct NaeGadgetParams {
    int n = 0;
    Int N, L, M;
    Int delta_min, delta_max;
    std::vector<VarTag> var_roles;

    friend bool operator==(const NaeGadgetParams& a, const NaeGadgetParams& b) = default;
};

struct DensestParams {
    /// s·max(ŵmax, 1); s = n^9 unless in oracle mode.
    Int aux_base;
    Int scale;
    Int matching_size;
    Int matching_weight;
    std::vector<std::pair<int, int>> matching_pairs;
    bool oracle_mode = false;

    friend bool operator==(const DensestParams& a, const DensestParams& b) = default;
};

struct EmbeddingParams {
    /// Column of each source edge (source edge order), -1 for zero-weight edges.
    std::vector<int> column_of_edge;
    /// Column of α_v per vertex, -1 when α_v = 0 or not used.
    std::vector<int> diag_column;
    std::vector<Rat> alpha_radicands;
    Int scale_c;
    /// Lifted point z and its integer offset T (k-Means lift only).
    std::optional<int> lifted_point;
    Int offset;
    bool signed_entries = false;

    friend bool operator==(const EmbeddingParams& a, const EmbeddingParams& b) = default;
};

/// Everything the solution map g and the reasonable-set predicate need.
struct ReductionCert {
    ReductionId id = ReductionId::R1;
    ProblemKind from;
    ProblemKind to;
    int source_n = 0;
    int target_n = 0;
    std::optional<NaeGadgetParams> gadget;
    std::optional<DensestParams> densest;
    std::optional<EmbeddingParams> embedding;
    /// Named scalars: "scale" (r3), "shift" (r4), "K" (r5min), "M" (r11), "wE" (r9, r10).
    std::vector<std::pair<std::string, Int>> constants;
    Corruption corruption = Corruption::None;

    /// g: feasible target solution to feasible source solution.
    Partition map_solution(const Partition& target) const;
    /// Membership in the reasonable set R.
    bool is_reasonable(const Partition& target) const;
    Int constant(std::string_view name) const;

    friend bool operator==(const ReductionCert& a, const ReductionCert& b) = default;
};

struct Reduction {
    Instance target;
    ReductionCert cert;
};

struct DeltaRange {
    Int min;
    Int max;
};

/// Over all vertices v and Q ⊆ N(v): d = Σ_{u∈Q} w(vu) − Σ_{u∉Q} w(vu).
/// Δmin is the least nonzero |d| (1 if there is none), Δmax the largest |d|.
DeltaRange compute_delta_min_max(const WeightedGraph& g);
/// The same range restricted to one vertex.
DeltaRange vertex_delta_range(const WeightedGraph& g, int v);

Reduction r1_distinct(const Instance& source);
Reduction r2_nae3(const Instance& source, const ReductionOptions& options = {});
Reduction r3_nae3_to_nae2(const Instance& source);
Reduction r4_nonneg(const Instance& source);
Reduction r5_bisection(const Instance& source, Orientation orientation);
Reduction r6_densest(const Instance& source, const ReductionOptions& options = {});
Reduction r7_two_means(const Instance& source);
Reduction r8_lift_kmeans(const Instance& source);
Reduction r9_sq_euclid(const Instance& source, const ReductionOptions& options = {});
Reduction r10_euclid(const Instance& source, const ReductionOptions& options = {});
Reduction r11_sparsest(const Instance& source);

Reduction reduce(ReductionId id, const Instance& source, const ReductionOptions& options = {});

struct ComposedCert {
    std::vector<ReductionCert> stages;
    /// Instance sizes: sizes[0] is the source, sizes[i+1] the output of stage i.
    std::vector<int> sizes;

    /// Applies the stage maps from the last stage back to the first.
    Partition map_solution(const Partition& target) const;

    friend bool operator==(const ComposedCert& a, const ComposedCert& b) = default;
};

struct ChainResult {
    Instance target;
    ComposedCert cert;
};

/// Throws ValidationError naming the first incompatible arrow of the path.
ChainResult chain_reduce(const Instance& source, const std::vector<ReductionId>& path,
                         const ReductionOptions& options = {});

} // namespace plslab
