#include "plslab/problems/kind.hpp"

#include "plslab/core/error.hpp"

#include <array>
#include <utility>

namespace plslab {

namespace {

constexpr std::array<std::pair<ProblemTag, std::string_view>, 13> kNames{{
    {ProblemTag::MaxCut, "maxcut"},
    {ProblemTag::MaxCutDeg5, "maxcut5"},
    {ProblemTag::DistinctMaxCutDeg5, "distinct-maxcut5"},
    {ProblemTag::PosNae3Sat, "pos-nae3"},
    {ProblemTag::OddHalfPosNae3Sat, "odd-half-nae3"},
    {ProblemTag::OddHalfPosNae2Sat, "odd-half-nae2"},
    {ProblemTag::OddMaxBisection, "odd-max-bisection"},
    {ProblemTag::OddMinBisection, "odd-min-bisection"},
    {ProblemTag::DensestCut, "densest-cut"},
    {ProblemTag::SparsestCut, "sparsest-cut"},
    {ProblemTag::KMeans, "kmeans"},
    {ProblemTag::SqEuclideanMaxCut, "sq-euclidean-maxcut"},
    {ProblemTag::EuclideanMaxCut, "euclidean-maxcut"},
}};

} // namespace

ProblemKind ProblemKind::kmeans(int k)
{
    if (k < 2) {
        throw ValidationError("k-Means needs k >= 2");
    }
    return ProblemKind{ProblemTag::KMeans, k};
}

bool operator==(const ProblemKind& a, const ProblemKind& b)
{
    return a.tag == b.tag && (a.tag != ProblemTag::KMeans || a.k == b.k);
}

std::string kind_name(ProblemTag tag)
{
    for (const auto& [t, name] : kNames) {
        if (t == tag) {
            return std::string(name);
        }
    }
    throw ValidationError("unknown problem tag");
}

std::string kind_name(const ProblemKind& kind)
{
    if (kind.tag == ProblemTag::KMeans) {
        return "kmeans(" + std::to_string(kind.k) + ")";
    }
    return kind_name(kind.tag);
}

ProblemTag parse_kind_tag(std::string_view name)
{
    for (const auto& [t, n] : kNames) {
        if (n == name) {
            return t;
        }
    }
    throw ValidationError("unknown problem kind '" + std::string(name) + "'");
}

Orientation orientation(ProblemTag tag)
{
    switch (tag) {
    case ProblemTag::OddMinBisection:
    case ProblemTag::SparsestCut:
    case ProblemTag::KMeans:
        return Orientation::Minimize;
    default:
        return Orientation::Maximize;
    }
}

bool is_nae(ProblemTag tag)
{
    return tag == ProblemTag::PosNae3Sat || tag == ProblemTag::OddHalfPosNae3Sat ||
           tag == ProblemTag::OddHalfPosNae2Sat;
}

bool is_cut_kind(ProblemTag tag)
{
    return !is_nae(tag) && tag != ProblemTag::KMeans;
}

bool is_odd_balanced(ProblemTag tag)
{
    return tag == ProblemTag::OddHalfPosNae3Sat || tag == ProblemTag::OddHalfPosNae2Sat ||
           tag == ProblemTag::OddMaxBisection || tag == ProblemTag::OddMinBisection;
}

bool is_density_kind(ProblemTag tag)
{
    return tag == ProblemTag::DensestCut || tag == ProblemTag::SparsestCut;
}

bool is_degree5(ProblemTag tag)
{
    return tag == ProblemTag::MaxCutDeg5 || tag == ProblemTag::DistinctMaxCutDeg5;
}

bool is_euclidean(ProblemTag tag)
{
    return tag == ProblemTag::SqEuclideanMaxCut || tag == ProblemTag::EuclideanMaxCut;
}

int part_count(const ProblemKind& kind)
{
    return kind.tag == ProblemTag::KMeans ? kind.k : 2;
}

} // namespace plslab
