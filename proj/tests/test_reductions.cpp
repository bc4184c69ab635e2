#include "support.hpp"

#include "plslab/core/error.hpp"
#include "plslab/engine/search.hpp"
#include "plslab/engine/transition_graph.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/reductions/reduction.hpp"
#include "plslab/verify/checks.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace plslab;
using plslab::test::complete;
using plslab::test::cut;
using plslab::test::graph;
using plslab::test::of;

namespace {

NaeFormula formula(int n, const std::vector<std::pair<std::vector<int>, int>>& clauses)
{
    NaeFormula f(n);
    for (const auto& [lits, w] : clauses) {
        f.add_clause(lits, Int(w));
    }
    return f;
}

Instance nae(ProblemTag tag, NaeFormula f)
{
    return Instance::of_formula(ProblemKind{tag}, std::move(f));
}

std::map<std::vector<int>, Int> clause_map(const NaeFormula& f)
{
    std::map<std::vector<int>, Int> out;
    for (const NaeClause& c : f.clauses()) {
        out[c.lits] += c.w;
    }
    return out;
}

// v = 0 with neighbours u1 = 1 (w 1), u2 = 2 (w 8), u3 = 3 (w 3)
WeightedGraph weighted_star()
{
    return graph(4, {{0, 1, 1}, {0, 2, 8}, {0, 3, 3}});
}

} // namespace

TEST_CASE("delta range of a vertex and of a graph")
{
    const DeltaRange v = vertex_delta_range(weighted_star(), 0);
    CHECK(v.min == 4);
    CHECK(v.max == 12);
    // the leaves contribute ±1, ±8, ±3
    const DeltaRange g = compute_delta_min_max(weighted_star());
    CHECK(g.min == 1);
    CHECK(g.max == 12);
    const DeltaRange e = compute_delta_min_max(graph(2, {{0, 1, 7}}));
    CHECK(e.min == 7);
    CHECK(e.max == 7);
    const DeltaRange z = compute_delta_min_max(graph(3, {{0, 1, 0}}));
    CHECK(z.min == 1);
    CHECK(z.max == 0);
    CHECK_THROWS_AS(vertex_delta_range(complete(7), 0), ValidationError);
}

TEST_CASE("r1 pads even degrees with weight-1 leaves")
{
    const Reduction r = r1_distinct(of(ProblemTag::MaxCutDeg5, complete(3)));
    const WeightedGraph& h = r.target.graph;
    CHECK(r.target.kind.tag == ProblemTag::DistinctMaxCutDeg5);
    CHECK(h.n() == 6);
    CHECK(h.weight(0, 1) == 11);
    CHECK(h.weight(1, 2) == 11);
    CHECK(h.weight(0, 3) == 1);
    CHECK(h.weight(1, 4) == 1);
    CHECK(h.weight(2, 5) == 1);
    for (int v = 0; v < 6; ++v) {
        CHECK(h.degree(v) % 2 == 1);
    }
    CHECK(validate_instance(r.target).empty());

    const WeightedGraph odd = graph(4, {{0, 1, 2}, {2, 3, 0}});
    const Reduction ro = r1_distinct(of(ProblemTag::MaxCutDeg5, odd));
    CHECK(ro.target.graph.n() == 4);
    CHECK(ro.target.graph.weight(0, 1) == 21);
    CHECK(ro.target.graph.weight(2, 3) == 1);
    CHECK(ro.cert.map_solution(cut(4, {0, 2})) == cut(4, {0, 2}));
}

TEST_CASE("r2 clause table on the weighted star")
{
    const Reduction r = r2_nae3(of(ProblemTag::DistinctMaxCutDeg5, weighted_star()));
    const NaeGadgetParams& p = *r.cert.gadget;
    const Int n_big = 9;
    const Int l = 64 * n_big;
    const Int m = 5 * Int(12) * l + 32 * n_big + 1;
    CHECK(p.N == n_big);
    CHECK(p.L == l);
    CHECK(p.M == m);
    CHECK(p.delta_max == 12);
    CHECK(r.target.formula.num_vars() == 17);

    const auto& cl = r.target.formula.clauses();
    // level 1: the three edges in input order
    CHECK(cl[0].lits == std::vector<int>{0, 1});
    CHECK(cl[0].w == m);
    CHECK(cl[1].w == 8 * m);
    CHECK(cl[2].w == 3 * m);
    // level 2 for v = 0: NAE(q_v, u) with q_0 = 4
    std::size_t i = 3;
    CHECK(cl[i].lits == std::vector<int>{4, 1});
    CHECK(cl[i].w == -l);
    CHECK(cl[i + 1].w == -8 * l);
    CHECK(cl[i + 2].w == -3 * l);
    // the three leaves' level-2 clauses follow
    i += 6;
    // level 3, a_0 = variable 8, v = 0: subsets in gadget order
    const std::vector<int> expect{-1, -1, 0, -1, 0, -1, 0, 0};
    for (std::size_t j = 0; j < expect.size(); ++j) {
        CAPTURE(j);
        CHECK(cl[i + j].lits == std::vector<int>{0, 4, 8});
        CHECK(cl[i + j].w == expect[j]);
    }
}

TEST_CASE("r2 clause and variable counts")
{
    const WeightedGraph g = graph(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 4}, {3, 4, 8}, {0, 4, 16}, {1, 3, 32}});
    const Instance src = of(ProblemTag::DistinctMaxCutDeg5, g);
    REQUIRE(validate_instance(src).empty());
    const Reduction r = r2_nae3(src);
    CHECK(r.target.formula.num_vars() == 21);
    std::map<std::pair<int, int>, int> per;
    for (const NaeClause& c : r.target.formula.clauses()) {
        if (c.lits.size() == 3) {
            ++per[{c.lits[0], c.lits[2]}];
        }
    }
    for (int v = 0; v < 5; ++v) {
        for (int a = 10; a < 21; ++a) {
            CHECK(per[{v, a}] == (1 << g.degree(v)));
        }
    }
    std::vector<int> side1{0, 2};
    for (int a = 10; a < 19; ++a) {
        side1.push_back(a);
    }
    CHECK(r.cert.map_solution(cut(21, side1)) == cut(5, {0, 2}));
    CHECK_THROWS_AS(r2_nae3(of(ProblemTag::DistinctMaxCutDeg5, complete(3))), ValidationError);
}

TEST_CASE("r3 splits each 3-clause into three pair clauses")
{
    const Instance src = nae(ProblemTag::OddHalfPosNae3Sat, formula(3, {{{0, 1, 2}, 4}}));
    const Reduction r = r3_nae3_to_nae2(src);
    const auto cl = clause_map(r.target.formula);
    CHECK(cl.size() == 3);
    CHECK(cl.at({0, 1}) == 2);
    CHECK(cl.at({0, 2}) == 2);
    CHECK(cl.at({1, 2}) == 2);
    CHECK(cost(src, cut(3, {0, 1})) == Rat(4));
    CHECK(cost(r.target, cut(3, {0, 1})) == Rat(4));
    CHECK(cost(r.target, cut(3, {0, 1, 2})) == Rat(0));
    for (std::uint64_t code = 0; code < 8; ++code) {
        const Partition s = Partition::decode(code, 3, 2);
        CHECK(cost(r.target, s) == cost(src, s));
    }
    // an odd 3-clause weight forces doubling
    const Reduction odd = r3_nae3_to_nae2(nae(ProblemTag::OddHalfPosNae3Sat, formula(3, {{{0, 1, 2}, 3}})));
    CHECK(odd.cert.constant("scale") == 2);
}

TEST_CASE("r4 completes and shifts")
{
    const Instance src = nae(ProblemTag::OddHalfPosNae2Sat, formula(3, {{{0, 1}, -2}, {{1, 2}, 5}}));
    const Reduction r = r4_nonneg(src);
    CHECK(r.cert.constant("shift") == 3);
    const auto& cl = r.target.formula.clauses();
    REQUIRE(cl.size() == 3);
    CHECK(cl[0].w == 1);
    CHECK(cl[1].w == 3);
    CHECK(cl[2].w == 8);
    for (const Partition& s : {cut(3, {0, 1}), cut(3, {2, 0}), cut(3, {1, 2})}) {
        CHECK(cost(r.target, s) == cost(src, s) + Rat(2 * 3));
    }
    const Reduction pos = r4_nonneg(nae(ProblemTag::OddHalfPosNae2Sat, formula(3, {{{0, 1}, 2}})));
    CHECK(pos.cert.constant("shift") == 1);
}

TEST_CASE("every odd bisection of a complete formula cuts (n+1)n pairs")
{
    for (int h = 1; h <= 3; ++h) {
        const int vars = 2 * h + 1;
        NaeFormula f(vars);
        for (int a = 0; a < vars; ++a) {
            for (int b = a + 1; b < vars; ++b) {
                f.add_clause({a, b}, Int(1));
            }
        }
        const Instance inst = nae(ProblemTag::OddHalfPosNae2Sat, f);
        for (std::uint64_t code = 0; code < (1U << vars); ++code) {
            const Partition s = Partition::decode(code, vars, 2);
            if (is_feasible(inst, s)) {
                CHECK(cost(inst, s) == Rat((h + 1) * h));
            }
        }
    }
}

TEST_CASE("r5 max and min instances")
{
    const Instance src = nae(ProblemTag::OddHalfPosNae2Sat, formula(3, {{{0, 1}, 3}}));
    const Reduction mx = r5_bisection(src, Orientation::Maximize);
    CHECK(mx.target.kind.tag == ProblemTag::OddMaxBisection);
    CHECK(mx.target.graph.weight(0, 1) == 3);
    CHECK(mx.target.graph.edge_count() == 1);
    CHECK(cost(mx.target, cut(3, {0})) == Rat(3));
    CHECK(cost(src, cut(3, {0})) == Rat(3));

    const Reduction mn = r5_bisection(src, Orientation::Minimize);
    CHECK(mn.target.kind.tag == ProblemTag::OddMinBisection);
    CHECK(mn.cert.constant("K") == 3);
    CHECK(mn.target.graph.weight(0, 1) == 0);
    CHECK(mn.target.graph.weight(0, 2) == 3);
    CHECK(mn.target.graph.weight(1, 2) == 3);
    for (std::uint64_t code = 0; code < 8; ++code) {
        const Partition s = Partition::decode(code, 3, 2);
        if (is_feasible(src, s)) {
            CHECK(cost(mn.target, s) == Rat(2 * 3) - cost(mx.target, s));
        }
    }
    CHECK_THROWS_AS(r5_bisection(nae(ProblemTag::OddHalfPosNae2Sat, formula(3, {{{0, 1}, -1}})), Orientation::Maximize),
                    ValidationError);
}

TEST_CASE("r6 on the weighted triangle")
{
    const Instance src = of(ProblemTag::OddMaxBisection, graph(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}));
    const Reduction r = r6_densest(src);
    const DensestParams& p = *r.cert.densest;
    CHECK(p.scale == 19683);
    CHECK(p.aux_base == 59049);
    CHECK(p.matching_size == 81);
    CHECK(p.matching_weight == 177156);
    CHECK_FALSE(p.oracle_mode);
    const WeightedGraph& h = r.target.graph;
    CHECK(h.n() == 3 + 162);
    CHECK(h.weight(0, 1) == 59050);
    CHECK(h.weight(0, 2) == 59051);
    CHECK(h.weight(1, 2) == 59052);
    CHECK(h.weight(3, 4) == 177156);
    CHECK(h.weight(163, 164) == 177156);
    CHECK(h.weight(4, 5) == 0);
    CHECK(h.edge_count() == 3 + 81);
    // (1 - 1/n^9) w_max <= w_min
    CHECK((p.scale - 1) * 59052 <= p.scale * 59050);

    std::vector<int> labels(165, 0);
    labels[0] = labels[1] = 1;
    for (int i = 0; i < 81; ++i) {
        labels[static_cast<std::size_t>(3 + 2 * i)] = 1;
    }
    const Partition good(labels, 2);
    CHECK(r.cert.is_reasonable(good));
    CHECK(r.cert.map_solution(good) == cut(3, {0, 1}));
    labels[3] = 0;
    CHECK_FALSE(r.cert.is_reasonable(Partition(labels, 2)));

    ReductionOptions o;
    o.r6_matching_size = Int(2);
    o.r6_scale = Int(16);
    const Reduction small = r6_densest(src, o);
    CHECK(small.cert.densest->oracle_mode);
    CHECK(small.target.graph.n() == 7);
}

TEST_CASE("r7 point matrix follows the edge columns")
{
    // edges v1v2, v2v3, v1v4
    const Instance src = of(ProblemTag::DensestCut, graph(4, {{0, 1, 2}, {1, 2, 3}, {0, 3, 5}}));
    const Reduction r = r7_two_means(src);
    const PointMatrix& m = *r.target.witness;
    REQUIRE(m.columns() == 3);
    CHECK(m.at(0, 0) == SqrtCoord(1, Rat(2)));
    CHECK(m.at(0, 1) == SqrtCoord());
    CHECK(m.at(0, 2) == SqrtCoord(1, Rat(5)));
    CHECK(m.at(1, 0) == SqrtCoord(-1, Rat(2)));
    CHECK(m.at(1, 1) == SqrtCoord(1, Rat(3)));
    CHECK(m.at(2, 1) == SqrtCoord(-1, Rat(3)));
    CHECK(m.at(3, 2) == SqrtCoord(-1, Rat(5)));
    CHECK(r.target.graph.weight(0, 1) == 4 * 2 + 3 + 5);
    CHECK(validate_instance(r.target).empty());
    CHECK(r.cert.map_solution(cut(4, {1})) == cut(4, {1}));
}

TEST_CASE("r7 on K3 gives cost 3 for a singleton cluster")
{
    const Instance src = of(ProblemTag::DensestCut, complete(3));
    const Reduction r = r7_two_means(src);
    const Partition s = cut(3, {0});
    CHECK(cost(r.target, s) == Rat(3));
    CHECK(kmeans_point_cost(*r.target.witness, s) == Rat(3));
    CHECK(Rat(6) - Rat(3) * cost(src, s) == Rat(3));
}

TEST_CASE("r7 orders clusterings by density")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Instance src = random_instance(ProblemKind{ProblemTag::DensestCut}, 7, 9, seed);
        const Reduction r = r7_two_means(src);
        std::vector<Partition> both;
        for (std::uint64_t code = 0; code < 128; ++code) {
            const Partition s = Partition::decode(code, 7, 2);
            if (is_feasible(src, s)) {
                both.push_back(s);
            }
        }
        for (std::size_t i = 0; i < both.size(); i += 7) {
            for (std::size_t j = 0; j < both.size(); j += 5) {
                const bool cheaper = cost(r.target, both[i]) < cost(r.target, both[j]);
                const bool denser = cost(src, both[i]) > cost(src, both[j]);
                CHECK(cheaper == denser);
            }
        }
    }
}

TEST_CASE("r8 lifts a point far away")
{
    const Instance src = random_instance(ProblemKind::kmeans(2), 4, 6, 2);
    const Reduction r = r8_lift_kmeans(src);
    const EmbeddingParams& e = *r.cert.embedding;
    REQUIRE(e.lifted_point == 4);
    const Int t2 = e.offset * e.offset;
    CHECK(r.target.graph.weight(0, 4) == t2);
    for (int y = 1; y < 4; ++y) {
        CHECK(r.target.graph.weight(y, 4) == src.graph.weight(0, y) + t2);
    }
    CHECK(r.target.kind.k == 3);
    CHECK(validate_instance(r.target).empty());
    // new column has a single nonzero integer entry
    const std::size_t last = r.target.witness->columns() - 1;
    int nonzero = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        nonzero += r.target.witness->at(i, last).sign != 0 ? 1 : 0;
    }
    CHECK(nonzero == 1);
    const TransitionGraph tg = build_transition_graph(r.target);
    for (std::size_t i : tg.sinks()) {
        CHECK(r.cert.is_reasonable(tg.node(i)));
    }
}

TEST_CASE("r9 on the weighted path")
{
    // u - v - x, weights 2, 2
    const Instance src = of(ProblemTag::OddMinBisection, graph(3, {{0, 1, 2}, {1, 2, 2}}));
    const Reduction r = r9_sq_euclid(src);
    const EmbeddingParams& e = *r.cert.embedding;
    CHECK(e.alpha_radicands == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    const PointMatrix& m = *r.target.witness;
    CHECK(m.squared_distance(0, 1) == Rat(2));
    CHECK(m.squared_distance(1, 2) == Rat(2));
    CHECK(m.squared_distance(0, 2) == Rat(4));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(m.squared_norm(i) == Rat(2));
    }
    CHECK(cost(r.target, cut(3, {1})) == Rat(4));
    CHECK(Rat(1 * 2 * 4) - Rat(4) == Rat(4));
    CHECK(validate_instance(r.target).empty());
}

TEST_CASE("r9 unbalancing flips lose at least w(E)")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Instance src = random_instance(ProblemKind{ProblemTag::OddMinBisection}, 7, 10, seed);
        const Reduction r = r9_sq_euclid(src);
        const Int we = src.graph.total_weight();
        const Problem tp(r.target);
        for (std::uint64_t code = 0; code < 128; ++code) {
            const Partition s = Partition::decode(code, 7, 2);
            const int gap = std::abs(s.count(1) - s.count(0));
            for (int v = 0; v < 7; ++v) {
                const Partition t = flip(s, v);
                if (std::abs(t.count(1) - t.count(0)) > gap) {
                    CHECK(tp.cost(t) <= tp.cost(s) - Rat(we));
                }
            }
        }
    }
}

TEST_CASE("r10 on the weighted path")
{
    const Instance src = of(ProblemTag::OddMinBisection, graph(3, {{0, 1, 2}, {1, 2, 2}}));
    const Reduction r = r10_euclid(src);
    const PointMatrix& m = *r.target.witness;
    CHECK(m.squared_norm(0) == Rat(32));
    CHECK(m.inner_product(0, 1) == Rat(14));
    CHECK(m.squared_distance(0, 1) == Rat(36));
    CHECK(r.target.graph.weight(0, 1) == 6);
    CHECK(r.target.graph.weight(0, 2) == 8);
    CHECK(validate_instance(r.target).empty());
    for (const Rat& a : r.cert.embedding->alpha_radicands) {
        CHECK(a.sign() >= 0);
    }
    ReductionOptions o;
    o.r10_scale = 5;
    CHECK(r10_euclid(src, o).target.graph.weight(0, 1) == 5 * 4 - 2);
}

TEST_CASE("r11 complements against the largest weight")
{
    const Instance src = of(ProblemTag::DensestCut, graph(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}));
    const Reduction r = r11_sparsest(src);
    CHECK(r.cert.constant("M") == 3);
    CHECK(r.target.graph.weight(0, 1) == 2);
    CHECK(r.target.graph.weight(0, 2) == 1);
    CHECK(r.target.graph.weight(1, 2) == 0);

    const Instance two = of(ProblemTag::DensestCut, graph(3, {{0, 1, 1}, {0, 2, 2}}));
    const Reduction r2 = r11_sparsest(two);
    const Partition s = cut(3, {0});
    CHECK(cost(two, s) == Rat(Int(3), Int(2)));
    CHECK(r2.cert.constant("M") == 2);
    CHECK(cost(r2.target, s) == Rat(2) - Rat(Int(3), Int(2)));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Instance g = random_instance(ProblemKind{ProblemTag::DensestCut}, 7, 10, seed);
        const TransitionGraph a = build_transition_graph(g);
        const TransitionGraph b = build_transition_graph(r11_sparsest(g).target);
        std::set<std::uint64_t> sa;
        std::set<std::uint64_t> sb;
        for (std::size_t i : a.sinks()) {
            sa.insert(a.codes[i]);
        }
        for (std::size_t i : b.sinks()) {
            sb.insert(b.codes[i]);
        }
        CHECK(sa == sb);
    }
}

TEST_CASE("fallback maps for unbalanced target solutions")
{
    const Instance src = of(ProblemTag::OddMinBisection, graph(3, {{0, 1, 2}, {1, 2, 2}}));
    const Reduction r = r9_sq_euclid(src);
    CHECK(r.cert.map_solution(cut(3, {})) == initial_solution(src));
    CHECK_FALSE(r.cert.is_reasonable(cut(3, {})));
    CHECK_THROWS_AS(r.cert.map_solution(cut(4, {})), ValidationError);
}

TEST_CASE("reduction paths")
{
    const Instance g = random_instance(RandomSpec{ProblemKind{ProblemTag::MaxCutDeg5}, 4, 10, 1, false, false});
    const ChainResult c = chain_reduce(g, parse_reduction_path("r1,r2"));
    const int n1 = c.cert.sizes[1];
    CHECK(c.target.formula.num_vars() == 4 * n1 + 1);
    CHECK(c.cert.sizes == std::vector<int>{4, n1, 4 * n1 + 1});

    const Instance bis = nae(ProblemTag::OddHalfPosNae2Sat, formula(3, {{{0, 1}, 3}, {{1, 2}, 1}}));
    const ChainResult e = chain_reduce(bis, parse_reduction_path("r5min,r9"));
    CHECK(e.target.kind.tag == ProblemTag::SqEuclideanMaxCut);
    CHECK(e.target.witness.has_value());
    CHECK(e.cert.map_solution(cut(3, {0, 2})) == cut(3, {0, 2}));

    try {
        chain_reduce(of(ProblemTag::DensestCut, complete(3)), parse_reduction_path("r7,r5min"));
        FAIL("expected an incompatible path");
    } catch (const ValidationError& err) {
        CHECK(std::string(err.what()).find("r5min") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_reduction_path("r1,r12"), ValidationError);
    CHECK(parse_reduction_id("r5") == ReductionId::R5Max);
}

TEST_CASE("chain sources are left alone by r1")
{
    const Instance g = corpus_source(ReductionId::R1, 4, 3, true);
    const Reduction r = r1_distinct(g);
    CHECK(r.target.graph.n() == 4);
}
