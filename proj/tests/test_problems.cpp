#include "support.hpp"

#include "plslab/core/error.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/verify/checks.hpp"

#include <doctest.h>

using namespace plslab;
using plslab::test::complete;
using plslab::test::cut;
using plslab::test::graph;
using plslab::test::of;

namespace {

// Objective straight from the definitions, sharing nothing with Problem.
Rat naive_cost(const Instance& inst, const Partition& s)
{
    const ProblemTag tag = inst.kind.tag;
    if (is_nae(tag)) {
        Int total = 0;
        for (const NaeClause& c : inst.formula.clauses()) {
            bool t = false;
            bool f = false;
            for (int x : c.lits) {
                (s.label(x) == 1 ? t : f) = true;
            }
            if (t && f) {
                total += c.w;
            }
        }
        return Rat(total);
    }
    const int n = inst.size();
    if (tag == ProblemTag::KMeans) {
        Rat total;
        for (int c = 0; c < s.k(); ++c) {
            Int within = 0;
            int size = 0;
            for (int u = 0; u < n; ++u) {
                if (s.label(u) != c) {
                    continue;
                }
                ++size;
                for (int v = u + 1; v < n; ++v) {
                    if (s.label(v) == c) {
                        within += inst.graph.weight(u, v);
                    }
                }
            }
            if (size > 0) {
                total += Rat(within, Int(size));
            }
        }
        return total;
    }
    Int w = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (s.label(u) != s.label(v)) {
                w += inst.graph.weight(u, v);
            }
        }
    }
    if (is_density_kind(tag)) {
        const int x = s.count(1);
        return Rat(w, Int(x * (n - x)));
    }
    return Rat(w);
}

std::uint64_t power(int k, int n)
{
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) {
        p *= static_cast<std::uint64_t>(k);
    }
    return p;
}

} // namespace

TEST_CASE("feasibility depends on part sizes")
{
    CHECK(counts_feasible(ProblemTag::OddMaxBisection, {2, 3}));
    CHECK_FALSE(counts_feasible(ProblemTag::OddMaxBisection, {1, 4}));
    CHECK(counts_feasible(ProblemTag::MaxCut, {0, 3}));
    CHECK_FALSE(counts_feasible(ProblemTag::DensestCut, {0, 3}));
    CHECK(counts_feasible(ProblemTag::KMeans, {0, 3, 0}));
    const Instance k3 = of(ProblemTag::OddMaxBisection, complete(3));
    CHECK(is_feasible(k3, cut(3, {0, 1})));
    CHECK_FALSE(is_feasible(k3, cut(3, {})));
}

TEST_CASE("cost examples")
{
    CHECK(cost(of(ProblemTag::DensestCut, complete(3)), cut(3, {0})) == Rat(1));
    CHECK(cost(of(ProblemTag::MaxCut, complete(3)), cut(3, {0})) == Rat(2));
    CHECK_THROWS_AS(cost(of(ProblemTag::SparsestCut, complete(3)), cut(3, {})), UndefinedObjectiveError);

    // single edge of weight 4 in one cluster: points 0 and 2 on a line, centroid 1
    Instance km = Instance::of_graph(ProblemKind::kmeans(2), graph(2, {{0, 1, 4}}));
    CHECK(cost(km, Partition({0, 0}, 2)) == Rat(2));
    PointMatrix line(2, 1);
    line.set(1, 0, SqrtCoord::integer(Int(2)));
    CHECK(kmeans_point_cost(line, Partition({0, 0}, 2)) == Rat(2));
    CHECK(cost(km, Partition({0, 1}, 2)) == Rat(0));

    NaeFormula f(2);
    f.add_clause({0, 1}, Int(5));
    const Instance nae = Instance::of_formula(ProblemKind{ProblemTag::PosNae3Sat}, f);
    CHECK(cost(nae, cut(2, {0})) == Rat(5));
    CHECK(cost(nae, cut(2, {0, 1})) == Rat(0));
}

TEST_CASE("flip_delta examples")
{
    const Instance k3 = of(ProblemTag::MaxCut, complete(3));
    CHECK(flip_delta(k3, cut(3, {0}), 1, 1) == Rat(0));
    const Instance iso = of(ProblemTag::MaxCut, graph(3, {{0, 1, 4}}));
    CHECK(flip_delta(iso, cut(3, {0}), 2, 1) == Rat(0));
    // v with incident weights 1, 8, 3, everyone on v's side
    const Instance star = of(ProblemTag::MaxCut, graph(4, {{0, 1, 1}, {0, 2, 8}, {0, 3, 3}}));
    CHECK(flip_delta(star, cut(4, {0, 1, 2, 3}), 0, 0) == Rat(12));
    const Instance bis = of(ProblemTag::OddMaxBisection, complete(3));
    CHECK_THROWS_AS(flip_delta(bis, cut(3, {0}), 0, 0), InfeasibleMoveError);
}

TEST_CASE("neighbourhood sizes")
{
    CHECK(neighbors(of(ProblemTag::OddMaxBisection, complete(3)), cut(3, {0, 1})).size() == 2);
    for (std::uint64_t code = 0; code < 8; ++code) {
        CHECK(neighbors(of(ProblemTag::MaxCut, complete(3)), Partition::decode(code, 3, 2)).size() == 3);
    }
    const Instance km = Instance::of_graph(ProblemKind::kmeans(3), complete(4));
    for (std::uint64_t code = 0; code < 81; ++code) {
        CHECK(neighbors(km, Partition::decode(code, 4, 3)).size() == 8);
    }
    const Problem p(of(ProblemTag::DensestCut, complete(3)));
    // (X={0}, Y={1,2}): 0 cannot leave X
    CHECK(p.moves(cut(3, {0})).size() == 2);
}

TEST_CASE("validate_instance")
{
    CHECK(validate_instance(of(ProblemTag::MaxCutDeg5, complete(6))).empty());
    const auto k7 = validate_instance(of(ProblemTag::MaxCutDeg5, complete(7)));
    REQUIRE(k7.size() == 7);
    CHECK(k7[0].find("degree 6") != std::string::npos);
    // zero-weight edges are non-edges for the degree bound
    const WeightedGraph star6 = graph(7, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {0, 6, 0}});
    CHECK(star6.degree(0) == 6);
    CHECK(validate_instance(of(ProblemTag::MaxCutDeg5, star6)).empty());

    const auto even = validate_instance(of(ProblemTag::OddMaxBisection, complete(4)));
    REQUIRE(even.size() == 1);
    CHECK(even[0].find("vertex count must be odd") != std::string::npos);

    CHECK_FALSE(validate_instance(of(ProblemTag::MaxCut, graph(2, {{0, 1, -1}}))).empty());
    CHECK_FALSE(validate_instance(of(ProblemTag::DistinctMaxCutDeg5, complete(3))).empty());
    CHECK(validate_instance(of(ProblemTag::DistinctMaxCutDeg5, graph(3, {{0, 1, 1}, {0, 2, 2}}))).empty());

    Instance sq = of(ProblemTag::SqEuclideanMaxCut, graph(2, {{0, 1, 5}}));
    PointMatrix m(2, 1);
    m.set(1, 0, SqrtCoord::integer(Int(2)));
    sq.witness = m;
    CHECK_FALSE(validate_instance(sq).empty());
    sq.graph.set_weight(0, 1, 4);
    CHECK(validate_instance(sq).empty());

    Instance eu = of(ProblemTag::EuclideanMaxCut, graph(2, {{0, 1, 2}}));
    eu.witness = m;
    CHECK(validate_instance(eu).empty());

    NaeFormula f(3);
    f.add_clause({0, 1, 2}, Int(1));
    CHECK_FALSE(validate_instance(Instance::of_formula(ProblemKind{ProblemTag::OddHalfPosNae2Sat}, f)).empty());
    CHECK(validate_instance(Instance::of_formula(ProblemKind{ProblemTag::OddHalfPosNae3Sat}, f)).empty());
}

TEST_CASE("cost and flip_delta agree with the definitions on every kind")
{
    for (int t = 0; t <= static_cast<int>(ProblemTag::EuclideanMaxCut); ++t) {
        ProblemKind kind{static_cast<ProblemTag>(t)};
        if (kind.tag == ProblemTag::KMeans) {
            kind = ProblemKind::kmeans(3);
        }
        const int n = 7;
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            CAPTURE(kind_name(kind));
            CAPTURE(seed);
            const Instance inst = random_instance(kind, n, 12, seed);
            REQUIRE(validate_instance(inst).empty());
            const Problem p(inst);
            const int k = p.parts();
            std::uint64_t feasible = 0;
            for (std::uint64_t code = 0; code < power(k, n); ++code) {
                const Partition s = Partition::decode(code, n, k);
                if (!p.is_feasible(s)) {
                    continue;
                }
                ++feasible;
                const Rat c = naive_cost(inst, s);
                REQUIRE(p.cost(s) == c);
                for (const auto& [e, target] : p.moves(s)) {
                    REQUIRE(p.flip_delta(s, e, target) == naive_cost(inst, s.moved(e, target)) - c);
                }
            }
            CHECK(p.feasible_count() == feasible);
        }
    }
}

TEST_CASE("orientation")
{
    CHECK(orientation(ProblemTag::OddMinBisection) == Orientation::Minimize);
    CHECK(orientation(ProblemTag::SparsestCut) == Orientation::Minimize);
    CHECK(orientation(ProblemTag::KMeans) == Orientation::Minimize);
    CHECK(orientation(ProblemTag::DensestCut) == Orientation::Maximize);
    CHECK(orientation(ProblemTag::EuclideanMaxCut) == Orientation::Maximize);
    const Problem p(of(ProblemTag::SparsestCut, complete(3)));
    CHECK(p.improves(Rat(-1)));
    CHECK_FALSE(p.improves(Rat(0)));
    CHECK(p.better(Rat(1), Rat(2)));
}

TEST_CASE("kind names round-trip")
{
    for (int t = 0; t <= static_cast<int>(ProblemTag::EuclideanMaxCut); ++t) {
        const auto tag = static_cast<ProblemTag>(t);
        CHECK(parse_kind_tag(kind_name(tag)) == tag);
    }
    CHECK(kind_name(ProblemKind::kmeans(3)) == "kmeans(3)");
    CHECK_THROWS_AS(parse_kind_tag("maxcut7"), ValidationError);
}
