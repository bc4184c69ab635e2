#include "plslab/core/error.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/reductions/reduction.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace plslab {

namespace {

void require_kind(const Instance& source, ProblemTag tag, ReductionId id)
{
    if (source.kind.tag != tag) {
        throw ValidationError(reduction_name(id) + " expects " + kind_name(tag) + ", got " + kind_name(source.kind));
    }
    const auto violations = validate_instance(source);
    if (!violations.empty()) {
        throw ValidationError(reduction_name(id) + " input is invalid: " + violations.front());
    }
}

ReductionCert make_cert(ReductionId id, const Instance& source, const Instance& target)
{
    ReductionCert c;
    c.id = id;
    c.from = source.kind;
    c.to = target.kind;
    c.source_n = source.size();
    c.target_n = target.size();
    return c;
}

Int as_integer(const Rat& r, const char* what)
{
    if (!r.is_integer()) {
        throw InvalidMatrixError(std::string(what) + " is not integral: " + r.to_string());
    }
    return r.num();
}

// Complete graph whose weights are the witness's squared distances.
WeightedGraph squared_distance_graph(const PointMatrix& m)
{
    const int n = static_cast<int>(m.points());
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.set_weight(u, v,
                         as_integer(m.squared_distance(static_cast<std::size_t>(u), static_cast<std::size_t>(v)),
                                    "squared distance"));
        }
    }
    return g;
}

bool all_zero(const WeightedGraph& g)
{
    return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.w.is_zero(); });
}

// Shared layout of the Euclidean embeddings: one column per nonzero edge, then one α column
// per vertex whose α_v is nonzero.
struct Embedding {
    PointMatrix points;
    EmbeddingParams params;
};

template <typename EdgeRadicand, typename Alpha>
Embedding embed(const WeightedGraph& g, bool signed_entries, EdgeRadicand edge_radicand, Alpha alpha)
{
    const auto n = static_cast<std::size_t>(g.n());
    Embedding out;
    out.points = PointMatrix(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.w.is_zero()) {
            out.params.column_of_edge.push_back(-1);
            continue;
        }
        const std::size_t c = out.points.add_column();
        out.params.column_of_edge.push_back(static_cast<int>(c));
        const Rat rad = edge_radicand(e.w);
        out.points.set(static_cast<std::size_t>(e.u), c, SqrtCoord(1, rad));
        out.points.set(static_cast<std::size_t>(e.v), c, SqrtCoord(signed_entries ? -1 : 1, rad));
    }
    for (std::size_t v = 0; v < n; ++v) {
        Rat used;
        for (const auto& [u, w] : g.incident(static_cast<int>(v))) {
            if (!w.is_zero()) {
                used += edge_radicand(w);
            }
        }
        const Rat a = alpha(used);
        if (a.sign() < 0) {
            throw InvalidMatrixError("negative α radicand " + a.to_string() + " at vertex " + std::to_string(v));
        }
        out.params.alpha_radicands.push_back(a);
        if (a.is_zero()) {
            out.params.diag_column.push_back(-1);
            continue;
        }
        const std::size_t c = out.points.add_column();
        out.params.diag_column.push_back(static_cast<int>(c));
        out.points.set(v, c, SqrtCoord(1, a));
    }
    out.params.signed_entries = signed_entries;
    return out;
}

} // namespace

Reduction r6_densest(const Instance& source, const ReductionOptions& options)
{
    require_kind(source, ProblemTag::OddMaxBisection, ReductionId::R6);
    const WeightedGraph& g = source.graph;
    const int n = g.n();
    if (n < 3) {
        throw ValidationError("r6 needs n >= 3");
    }
    DensestParams p;
    p.oracle_mode = options.r6_scale.has_value() || options.r6_matching_size.has_value();
    p.scale = options.r6_scale.value_or(ipow(Int(n), 9));
    p.matching_size = options.r6_matching_size.value_or(ipow(Int(n), 4));
    if (p.scale < 1 || p.matching_size < 0) {
        throw ValidationError("r6 needs scale >= 1 and matching size >= 0");
    }
    const Int w_hat_max = std::max(g.max_weight(), Int(1));
    p.aux_base = p.scale * w_hat_max;
    const Int w_max = p.aux_base + std::max(g.max_weight(), Int(0));
    p.matching_weight = options.corruption == Corruption::UnitMatchingWeight ? Int(1) : Int(n * w_max);
    if (p.matching_size > Int(1'000'000)) {
        throw ValidationError("r6 matching of size " + to_string(p.matching_size) + " is too large to build");
    }
    const int m = static_cast<int>(p.matching_size);
    WeightedGraph h(n + 2 * m);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            h.set_weight(u, v, p.aux_base + g.weight(u, v));
        }
    }
    for (int i = 0; i < m; ++i) {
        const int a = n + 2 * i;
        h.set_weight(a, a + 1, p.matching_weight);
        p.matching_pairs.emplace_back(a, a + 1);
    }
    Reduction r;
    r.target = Instance::of_graph(ProblemKind{ProblemTag::DensestCut}, std::move(h));
    r.cert = make_cert(ReductionId::R6, source, r.target);
    r.cert.densest = std::move(p);
    r.cert.corruption = options.corruption;
    return r;
}

Reduction r7_two_means(const Instance& source)
{
    require_kind(source, ProblemTag::DensestCut, ReductionId::R7);
    const WeightedGraph& g = source.graph;
    for (int v = 0; v < g.n(); ++v) {
        const auto inc = g.incident(v);
        if (std::none_of(inc.begin(), inc.end(), [](const auto& e) { return !e.second.is_zero(); })) {
            throw ValidationError("r7 needs every vertex on a nonzero edge; vertex " + std::to_string(v) +
                                  " is isolated");
        }
    }
    EmbeddingParams params;
    PointMatrix pts(static_cast<std::size_t>(g.n()), 0);
    for (const Edge& e : g.edges()) {
        if (e.w.is_zero()) {
            params.column_of_edge.push_back(-1);
            continue;
        }
        const std::size_t c = pts.add_column();
        params.column_of_edge.push_back(static_cast<int>(c));
        pts.set(static_cast<std::size_t>(e.u), c, SqrtCoord(1, Rat(e.w)));
        pts.set(static_cast<std::size_t>(e.v), c, SqrtCoord(-1, Rat(e.w)));
    }
    Reduction r;
    r.target = Instance::of_graph(ProblemKind::kmeans(2), squared_distance_graph(pts));
    r.target.witness = std::move(pts);
    r.cert = make_cert(ReductionId::R7, source, r.target);
    r.cert.embedding = std::move(params);
    r.cert.constants.emplace_back("wE", g.total_weight());
    return r;
}

Reduction r8_lift_kmeans(const Instance& source)
{
    require_kind(source, ProblemTag::KMeans, ReductionId::R8);
    if (!source.witness) {
        throw ValidationError("r8 needs a witness point matrix");
    }
    const int n = source.graph.n();
    const int k = source.kind.k;
    if (k + 1 > n) {
        throw ValidationError("r8 needs k+1 <= point count (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    const PointMatrix& old = *source.witness;
    Int d_sum = 0;
    for (const Edge& e : source.graph.edges()) {
        d_sum += e.w;
    }
    const auto dims = static_cast<unsigned>(old.columns());
    Int root = boost::multiprecision::sqrt(Int(dims));
    if (root * root < dims) {
        root += 1;
    }
    const Int t = std::max(Int(1), Int(3 * n * d_sum * root));
    const Int t2 = t * t;

    PointMatrix pts = old;
    const std::size_t z = pts.add_point();
    for (std::size_t c = 0; c < old.columns(); ++c) {
        pts.set(z, c, old.at(0, c));
    }
    const std::size_t fresh = pts.add_column();
    pts.set(z, fresh, SqrtCoord::integer(t));

    WeightedGraph h(n + 1);
    for (const Edge& e : source.graph.edges()) {
        h.set_weight(e.u, e.v, e.w, e.explicit_zero);
    }
    for (int y = 0; y < n; ++y) {
        h.set_weight(y, n, (y == 0 ? Int(0) : source.graph.weight(0, y)) + t2);
    }
    EmbeddingParams params;
    params.lifted_point = n;
    params.offset = t;
    Reduction r;
    r.target = Instance::of_graph(ProblemKind::kmeans(k + 1), std::move(h));
    r.target.witness = std::move(pts);
    r.cert = make_cert(ReductionId::R8, source, r.target);
    r.cert.embedding = std::move(params);
    return r;
}

Reduction r9_sq_euclid(const Instance& source, const ReductionOptions& options)
{
    require_kind(source, ProblemTag::OddMinBisection, ReductionId::R9);
    const WeightedGraph& g = source.graph;
    const Int we = g.total_weight();
    Reduction r;
    if (all_zero(g)) {
        r.target = Instance::of_graph(ProblemKind{ProblemTag::SqEuclideanMaxCut}, WeightedGraph(g.n()));
        r.target.witness = PointMatrix(static_cast<std::size_t>(g.n()), 0);
        r.cert = make_cert(ReductionId::R9, source, r.target);
        r.cert.embedding = EmbeddingParams{};
        r.cert.constants.emplace_back("wE", we);
        return r;
    }
    const bool signed_entries = options.corruption == Corruption::SignedEmbedding;
    Embedding emb = embed(
        g, signed_entries, [](const Int& w) { return Rat(w, Int(2)); },
        [&](const Rat& used) { return Rat(we, Int(2)) - used; });
    r.target = Instance::of_graph(ProblemKind{ProblemTag::SqEuclideanMaxCut}, squared_distance_graph(emb.points));
    r.target.witness = std::move(emb.points);
    r.cert = make_cert(ReductionId::R9, source, r.target);
    emb.params.scale_c = 1;
    r.cert.embedding = std::move(emb.params);
    r.cert.constants.emplace_back("wE", we);
    r.cert.corruption = options.corruption;
    return r;
}

Reduction r10_euclid(const Instance& source, const ReductionOptions& options)
{
    require_kind(source, ProblemTag::OddMinBisection, ReductionId::R10);
    const Int c = options.r10_scale;
    if (c < 2) {
        throw ValidationError("r10 needs C >= 2");
    }
    const WeightedGraph& g = source.graph;
    const Int we = g.total_weight();
    Reduction r;
    if (all_zero(g)) {
        r.target = Instance::of_graph(ProblemKind{ProblemTag::EuclideanMaxCut}, WeightedGraph(g.n()));
        r.target.witness = PointMatrix(static_cast<std::size_t>(g.n()), 0);
        r.cert = make_cert(ReductionId::R10, source, r.target);
        r.cert.embedding = EmbeddingParams{};
        r.cert.embedding->scale_c = c;
        r.cert.constants.emplace_back("wE", we);
        return r;
    }
    const Rat norm2 = Rat(c * c * we * we, Int(2));
    Embedding emb = embed(
        g, false, [&](const Int& w) { return Rat(c * w * we) - Rat(w * w, Int(2)); },
        [&](const Rat& used) { return norm2 - used; });
    const int n = g.n();
    WeightedGraph h(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            h.set_weight(u, v, c * we - g.weight(u, v));
        }
    }
    r.target = Instance::of_graph(ProblemKind{ProblemTag::EuclideanMaxCut}, std::move(h));
    r.target.witness = std::move(emb.points);
    r.cert = make_cert(ReductionId::R10, source, r.target);
    emb.params.scale_c = c;
    r.cert.embedding = std::move(emb.params);
    r.cert.constants.emplace_back("wE", we);
    return r;
}

Reduction r11_sparsest(const Instance& source)
{
    require_kind(source, ProblemTag::DensestCut, ReductionId::R11);
    const WeightedGraph& g = source.graph;
    const Int m = std::max(g.max_weight(), Int(0));
    const int n = g.n();
    WeightedGraph h(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            h.set_weight(u, v, m - g.weight(u, v));
        }
    }
    Reduction r;
    r.target = Instance::of_graph(ProblemKind{ProblemTag::SparsestCut}, std::move(h));
    r.cert = make_cert(ReductionId::R11, source, r.target);
    r.cert.constants.emplace_back("M", m);
    return r;
}

} // namespace plslab
