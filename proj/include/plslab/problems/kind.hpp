#pragma once

#include <string>
#include <string_view>

namespace plslab {

enum class ProblemTag {
    MaxCut,
    MaxCutDeg5,
    DistinctMaxCutDeg5,
    PosNae3Sat,
    OddHalfPosNae3Sat,
    OddHalfPosNae2Sat,
    OddMaxBisection,
    OddMinBisection,
    DensestCut,
    SparsestCut,
    KMeans,
    SqEuclideanMaxCut,
    EuclideanMaxCut,
};

enum class Orientation { Maximize, Minimize };

struct ProblemKind {
    ProblemTag tag = ProblemTag::MaxCut;
    int k = 2; // cluster count; meaningful for KMeans only

    static ProblemKind kmeans(int k);

    friend bool operator==(const ProblemKind& a, const ProblemKind& b);
};

/// Command-line tag such as "maxcut5" or "odd-min-bisection".
std::string kind_name(ProblemTag tag);
std::string kind_name(const ProblemKind& kind);
ProblemTag parse_kind_tag(std::string_view name);

Orientation orientation(ProblemTag tag);
bool is_nae(ProblemTag tag);
/// Graph-carried problems whose solutions are bipartitions.
bool is_cut_kind(ProblemTag tag);
/// |#X - #Y| = 1 kinds (odd bisections and odd-half NAE).
bool is_odd_balanced(ProblemTag tag);
/// Densest and Sparsest Cut (ratio objective, both sides nonempty).
bool is_density_kind(ProblemTag tag);
bool is_degree5(ProblemTag tag);
bool is_euclidean(ProblemTag tag);
/// Number of parts a solution uses.
int part_count(const ProblemKind& kind);

} // namespace plslab
