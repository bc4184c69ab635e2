#include "plslab/reductions/reduction.hpp"

#include "plslab/core/error.hpp"
#include "plslab/engine/search.hpp"
#include "plslab/problems/problem.hpp"

#include <array>
#include <cstdlib>

namespace plslab {

namespace {

struct IdInfo {
    ReductionId id;
    std::string_view name;
    ProblemTag from;
    ProblemTag to;
};

constexpr std::array<IdInfo, 12> kIds{{
    {ReductionId::R1, "r1", ProblemTag::MaxCutDeg5, ProblemTag::DistinctMaxCutDeg5},
    {ReductionId::R2, "r2", ProblemTag::DistinctMaxCutDeg5, ProblemTag::OddHalfPosNae3Sat},
    {ReductionId::R3, "r3", ProblemTag::OddHalfPosNae3Sat, ProblemTag::OddHalfPosNae2Sat},
    {ReductionId::R4, "r4", ProblemTag::OddHalfPosNae2Sat, ProblemTag::OddHalfPosNae2Sat},
    {ReductionId::R5Max, "r5max", ProblemTag::OddHalfPosNae2Sat, ProblemTag::OddMaxBisection},
    {ReductionId::R5Min, "r5min", ProblemTag::OddHalfPosNae2Sat, ProblemTag::OddMinBisection},
    {ReductionId::R6, "r6", ProblemTag::OddMaxBisection, ProblemTag::DensestCut},
    {ReductionId::R7, "r7", ProblemTag::DensestCut, ProblemTag::KMeans},
    {ReductionId::R8, "r8", ProblemTag::KMeans, ProblemTag::KMeans},
    {ReductionId::R9, "r9", ProblemTag::OddMinBisection, ProblemTag::SqEuclideanMaxCut},
    {ReductionId::R10, "r10", ProblemTag::OddMinBisection, ProblemTag::EuclideanMaxCut},
    {ReductionId::R11, "r11", ProblemTag::DensestCut, ProblemTag::SparsestCut},
}};

const IdInfo& info(ReductionId id)
{
    for (const auto& i : kIds) {
        if (i.id == id) {
            return i;
        }
    }
    throw ValidationError("unknown reduction id");
}

constexpr std::array<std::pair<Corruption, std::string_view>, 5> kCorruptions{{
    {Corruption::None, "none"},
    {Corruption::GadgetLEqualsM, "gadget-l-equals-m"},
    {Corruption::SignedEmbedding, "signed-embedding"},
    {Corruption::UnitMatchingWeight, "unit-matching-weight"},
    {Corruption::WrongLevelTags, "wrong-level-tags"},
}};

Partition restrict(const Partition& s, int n)
{
    std::vector<int> labels(s.labels().begin(), s.labels().begin() + n);
    return Partition(std::move(labels), s.k());
}

bool odd_balanced(const std::vector<int>& counts)
{
    return std::abs(counts[0] - counts[1]) == 1;
}

} // namespace

std::string reduction_name(ReductionId id)
{
    return std::string(info(id).name);
}

ReductionId parse_reduction_id(std::string_view name)
{
    if (name == "r5") {
        return ReductionId::R5Max;
    }
    for (const auto& i : kIds) {
        if (i.name == name) {
            return i.id;
        }
    }
    throw ValidationError("unknown reduction '" + std::string(name) + "'");
}

std::vector<ReductionId> parse_reduction_path(std::string_view text)
{
    std::vector<ReductionId> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_reduction_id(text.substr(pos, end - pos)));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

ProblemTag reduction_source(ReductionId id)
{
    return info(id).from;
}

ProblemTag reduction_target(ReductionId id)
{
    return info(id).to;
}

std::string corruption_name(Corruption c)
{
    for (const auto& [k, name] : kCorruptions) {
        if (k == c) {
            return std::string(name);
        }
    }
    throw ValidationError("unknown corruption");
}

Corruption parse_corruption(std::string_view name)
{
    for (const auto& [k, n] : kCorruptions) {
        if (n == name) {
            return k;
        }
    }
    throw ValidationError("unknown corruption '" + std::string(name) + "'");
}

Int ReductionCert::constant(std::string_view name) const
{
    for (const auto& [k, v] : constants) {
        if (k == name) {
            return v;
        }
    }
    throw ValidationError("certificate of " + reduction_name(id) + " has no constant '" + std::string(name) + "'");
}

bool ReductionCert::is_reasonable(const Partition& t) const
{
    const auto counts = t.counts();
    switch (id) {
    case ReductionId::R6: {
        for (const auto& [a, b] : densest->matching_pairs) {
            if (t.label(a) == t.label(b)) {
                return false;
            }
        }
        return odd_balanced(restrict(t, source_n).counts());
    }
    case ReductionId::R7:
        return counts[0] > 0 && counts[1] > 0;
    case ReductionId::R8: {
        const int z = *embedding->lifted_point;
        return counts[static_cast<std::size_t>(t.label(z))] == 1;
    }
    case ReductionId::R9:
    case ReductionId::R10:
        return odd_balanced(counts);
    default:
        return true;
    }
}

Partition ReductionCert::map_solution(const Partition& t) const
{
    if (t.size() != target_n || t.k() != part_count(to)) {
        throw ValidationError("solution of size " + std::to_string(t.size()) + " with " + std::to_string(t.k()) +
                              " parts does not fit the " + reduction_name(id) + " target");
    }
    if (!counts_feasible(to.tag, t.counts())) {
        throw ValidationError("solution is infeasible for the " + reduction_name(id) + " target");
    }
    switch (id) {
    case ReductionId::R1:
        return restrict(t, source_n);
    case ReductionId::R2: {
        std::vector<int> labels(static_cast<std::size_t>(source_n));
        const VarRole wanted = corruption == Corruption::WrongLevelTags ? VarRole::Level3 : VarRole::Level1;
        for (std::size_t x = 0; x < gadget->var_roles.size(); ++x) {
            const VarTag& tag = gadget->var_roles[x];
            if (tag.role == wanted && tag.index < source_n) {
                labels[static_cast<std::size_t>(tag.index)] = t.label(static_cast<int>(x));
            }
        }
        return Partition(std::move(labels), 2);
    }
    case ReductionId::R3:
    case ReductionId::R4:
    case ReductionId::R5Max:
    case ReductionId::R5Min:
    case ReductionId::R11:
        return t;
    case ReductionId::R6:
    case ReductionId::R9:
    case ReductionId::R10: {
        Partition s = restrict(t, source_n);
        return odd_balanced(s.counts()) ? s : initial_solution(from, source_n);
    }
    case ReductionId::R7:
        return is_reasonable(t) ? t : initial_solution(from, source_n);
    case ReductionId::R8: {
        if (!is_reasonable(t)) {
            return initial_solution(from, source_n);
        }
        const int zc = t.label(*embedding->lifted_point);
        std::vector<int> labels(static_cast<std::size_t>(source_n));
        for (int i = 0; i < source_n; ++i) {
            const int l = t.label(i);
            labels[static_cast<std::size_t>(i)] = l > zc ? l - 1 : l;
        }
        return Partition(std::move(labels), from.k);
    }
    }
    throw ValidationError("unknown reduction id");
}

Reduction reduce(ReductionId id, const Instance& source, const ReductionOptions& options)
{
    switch (id) {
    case ReductionId::R1:
        return r1_distinct(source);
    case ReductionId::R2:
        return r2_nae3(source, options);
    case ReductionId::R3:
        return r3_nae3_to_nae2(source);
    case ReductionId::R4:
        return r4_nonneg(source);
    case ReductionId::R5Max:
        return r5_bisection(source, Orientation::Maximize);
    case ReductionId::R5Min:
        return r5_bisection(source, Orientation::Minimize);
    case ReductionId::R6:
        return r6_densest(source, options);
    case ReductionId::R7:
        return r7_two_means(source);
    case ReductionId::R8:
        return r8_lift_kmeans(source);
    case ReductionId::R9:
        return r9_sq_euclid(source, options);
    case ReductionId::R10:
        return r10_euclid(source, options);
    case ReductionId::R11:
        return r11_sparsest(source);
    }
    throw ValidationError("unknown reduction id");
}

Partition ComposedCert::map_solution(const Partition& target) const
{
    Partition s = target;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        s = it->map_solution(s);
    }
    return s;
}

ChainResult chain_reduce(const Instance& source, const std::vector<ReductionId>& path,
                         const ReductionOptions& options)
{
    if (path.empty()) {
        throw ValidationError("empty reduction path");
    }
    ProblemTag current = source.kind.tag;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (reduction_source(path[i]) != current) {
            const std::string before = i == 0 ? "input " + kind_name(current) : reduction_name(path[i - 1]);
            throw ValidationError("incompatible path: " + before + " -> " + reduction_name(path[i]) + " (" +
                                  reduction_name(path[i]) + " expects " + kind_name(reduction_source(path[i])) +
                                  ", got " + kind_name(current) + ")");
        }
        current = reduction_target(path[i]);
    }
    ChainResult out;
    out.target = source;
    out.cert.sizes.push_back(source.size());
    for (ReductionId id : path) {
        Reduction r = reduce(id, out.target, options);
        out.target = std::move(r.target);
        out.cert.stages.push_back(std::move(r.cert));
        out.cert.sizes.push_back(out.target.size());
    }
    return out;
}

} // namespace plslab
