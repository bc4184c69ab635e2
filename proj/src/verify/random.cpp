#include "plslab/core/error.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/reductions/reduction.hpp"
#include "plslab/verify/checks.hpp"

#include <random>
#include <set>

namespace plslab {

namespace {

constexpr int kMaxAttempts = 20000;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Plain modulo keeps the stream identical across standard libraries.
    std::uint64_t below(std::uint64_t m) { return gen_() % m; }
    bool coin() { return (gen_() & 1U) != 0; }
    Int weight(const Int& lo, const Int& hi) { return lo + Int(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 gen_;
};

WeightedGraph random_graph(Rng& rng, int n, const Int& wmax, int max_degree, bool connected, bool positive)
{
    WeightedGraph g(n);
    const Int lo = positive ? Int(1) : Int(0);
    if (connected) {
        for (int v = 1; v < n; ++v) {
            int u = 0;
            for (int tries = 0; tries < 64; ++tries) {
                u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
                if (g.degree(u) < max_degree) {
                    break;
                }
            }
            g.set_weight(u, v, rng.weight(Int(1), std::max(wmax, Int(1))));
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v) || !rng.coin()) {
                continue;
            }
            if (g.degree(u) >= max_degree || g.degree(v) >= max_degree) {
                continue;
            }
            const Int w = rng.weight(lo, wmax);
            if (w.is_zero()) {
                g.set_weight(u, v, w, true);
            } else {
                g.set_weight(u, v, w);
            }
        }
    }
    return g;
}

bool all_odd(const WeightedGraph& g)
{
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) % 2 == 0) {
            return false;
        }
    }
    return true;
}

NaeFormula random_formula(Rng& rng, int n, const Int& wmax, bool pairs_only, bool nonnegative)
{
    NaeFormula f(n);
    const int clauses = 2 * n;
    for (int c = 0; c < clauses; ++c) {
        const int size = pairs_only || n < 3 || rng.coin() ? 2 : 3;
        std::set<int> vars;
        while (static_cast<int>(vars.size()) < size) {
            vars.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        }
        f.add_clause(std::vector<int>(vars.begin(), vars.end()), rng.weight(nonnegative ? Int(0) : Int(-wmax), wmax));
    }
    return f;
}

Instance random_points(Rng& rng, ProblemKind kind, int n, const Int& wmax)
{
    const std::size_t columns = 3;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Int> radicand(columns);
        for (auto& r : radicand) {
            r = rng.weight(Int(1), std::max(wmax, Int(1)));
        }
        PointMatrix m(static_cast<std::size_t>(n), columns);
        std::set<std::vector<int>> seen;
        bool duplicate = false;
        for (int i = 0; i < n && !duplicate; ++i) {
            std::vector<int> signs;
            for (std::size_t c = 0; c < columns; ++c) {
                const int s = static_cast<int>(rng.below(3)) - 1;
                signs.push_back(s);
                m.set(static_cast<std::size_t>(i), c, SqrtCoord(s, s == 0 ? Rat(0) : Rat(radicand[c])));
            }
            duplicate = !seen.insert(signs).second;
        }
        if (duplicate) {
            continue;
        }
        WeightedGraph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                g.set_weight(u, v, m.squared_distance(static_cast<std::size_t>(u), static_cast<std::size_t>(v)).num());
            }
        }
        Instance inst = Instance::of_graph(kind, std::move(g));
        inst.witness = std::move(m);
        return inst;
    }
    throw ValidationError("could not draw " + std::to_string(n) + " distinct points");
}

Instance random_euclidean(Rng& rng, int n, const Int& wmax)
{
    const int m = n | 1;
    const Instance src =
        Instance::of_graph(ProblemKind{ProblemTag::OddMinBisection}, random_graph(rng, m, wmax, m, false, false));
    Instance t = reduce(ReductionId::R10, src).target;
    if (m == n) {
        return t;
    }
    WeightedGraph g(n);
    for (const Edge& e : t.graph.edges()) {
        if (e.v < n) {
            g.set_weight(e.u, e.v, e.w, e.explicit_zero);
        }
    }
    auto rows = t.witness->rows();
    rows.pop_back();
    Instance out = Instance::of_graph(t.kind, std::move(g));
    out.witness = PointMatrix(std::move(rows));
    return out;
}

Instance draw(Rng& rng, const RandomSpec& spec)
{
    const ProblemTag tag = spec.kind.tag;
    const int n = spec.n;
    const Int& wmax = spec.weight_max;
    if (is_nae(tag)) {
        return Instance::of_formula(spec.kind, random_formula(rng, n, wmax, tag == ProblemTag::OddHalfPosNae2Sat, spec.nonnegative));
    }
    switch (tag) {
    case ProblemTag::KMeans:
    case ProblemTag::SqEuclideanMaxCut:
        return random_points(rng, spec.kind, n, wmax);
    case ProblemTag::EuclideanMaxCut:
        return random_euclidean(rng, n, wmax);
    default:
        break;
    }
    const int max_degree = is_degree5(tag) ? 5 : n;
    const bool distinct = tag == ProblemTag::DistinctMaxCutDeg5;
    return Instance::of_graph(spec.kind,
                              random_graph(rng, n, wmax, max_degree, is_density_kind(tag), distinct));
}

} // namespace

Instance random_instance(const RandomSpec& spec)
{
    if (spec.n < 1) {
        throw ValidationError("random instance needs n >= 1");
    }
    const ProblemTag tag = spec.kind.tag;
    if (is_odd_balanced(tag) && spec.n % 2 == 0) {
        throw ValidationError(kind_name(tag) + " needs an odd n (got " + std::to_string(spec.n) + ")");
    }
    if (is_density_kind(tag) && spec.n < 2) {
        throw ValidationError(kind_name(tag) + " needs n >= 2");
    }
    if (is_nae(tag) && spec.n < 2) {
        throw ValidationError(kind_name(tag) + " needs at least 2 variables");
    }
    if (spec.odd_degrees && !is_nae(tag) && spec.n % 2 == 1) {
        throw ValidationError("a graph with every degree odd needs an even n");
    }
    if (tag == ProblemTag::KMeans && spec.kind.k < 2) {
        throw ValidationError("k-Means needs k >= 2");
    }
    if (spec.weight_max.sign() < 0) {
        throw ValidationError("weight maximum must be non-negative");
    }
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Instance inst = draw(rng, spec);
        if (spec.odd_degrees && !is_nae(spec.kind.tag) && !all_odd(inst.graph)) {
            continue;
        }
        if (validate_instance(inst).empty()) {
            return inst;
        }
    }
    throw ValidationError("no valid random " + kind_name(spec.kind) + " instance with n=" + std::to_string(spec.n) +
                          " after " + std::to_string(kMaxAttempts) + " draws");
}

Instance random_instance(ProblemKind kind, int n, const Int& weight_max, std::uint64_t seed)
{
    return random_instance(RandomSpec{kind, n, weight_max, seed, false, false});
}

Instance corpus_source(ReductionId id, int n, std::uint64_t seed, bool odd_degrees)
{
    RandomSpec spec{ProblemKind{reduction_source(id)}, n, 10, seed, odd_degrees, false};
    spec.nonnegative = id == ReductionId::R5Max || id == ReductionId::R5Min;
    return random_instance(spec);
}

WeightedGraph random_degree4_graph(int n, const Int& weight_max, std::uint64_t seed)
{
    Rng rng(seed);
    return random_graph(rng, n, weight_max, 4, false, true);
}

} // namespace plslab
