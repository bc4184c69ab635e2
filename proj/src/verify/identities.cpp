#include "plslab/core/error.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/verify/checks.hpp"

namespace plslab {

namespace {

std::string render(const Partition& p)
{
    std::string s;
    for (int l : p.labels()) {
        s += static_cast<char>('0' + l);
    }
    return s;
}

template <typename F>
void for_each_solution(int n, int k, F f)
{
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(k);
    }
    for (std::uint64_t code = 0; code < total; ++code) {
        f(Partition::decode(code, n, k));
    }
}

class Checker {
public:
    explicit Checker(IdentityReport& rep) : rep_(rep) {}

    void expect(bool ok, const std::string& what)
    {
        ++rep_.checked;
        if (!ok && rep_.violations.size() < 100) {
            rep_.violations.push_back(what);
        }
    }

private:
    IdentityReport& rep_;
};

void target_is_valid(const Reduction& r, Checker& c)
{
    const auto v = validate_instance(r.target);
    c.expect(v.empty(), v.empty() ? "" : "target instance invalid: " + v.front());
}

} // namespace

IdentityReport check_identities(ReductionId id, const Instance& source, const ReductionOptions& options)
{
    const Reduction r = reduce(id, source, options);
    IdentityReport rep;
    rep.reduction = reduction_name(id);
    rep.digest = instance_digest(source);
    Checker c(rep);
    const Problem sp(source);
    const Problem tp(r.target);
    const int n = source.size();
    target_is_valid(r, c);

    switch (id) {
    case ReductionId::R1: {
        const WeightedGraph& g = source.graph;
        const WeightedGraph& h = r.target.graph;
        int even = 0;
        for (int v = 0; v < n; ++v) {
            even += g.degree(v) % 2 == 0 ? 1 : 0;
        }
        c.expect(h.n() == n + even, "r1 vertex count");
        for (int v = 0; v < h.n(); ++v) {
            c.expect(h.degree(v) % 2 == 1, "r1 vertex " + std::to_string(v) + " has even degree");
        }
        for (const Edge& e : g.edges()) {
            c.expect(h.weight(e.u, e.v) == e.w * 10 + 1, "r1 weight of edge (" + std::to_string(e.u) + "," +
                                                              std::to_string(e.v) + ")");
        }
        for (const Edge& e : h.edges()) {
            if (e.v >= n) {
                c.expect(e.w == 1, "r1 dummy edge weight");
            }
        }
        break;
    }
    case ReductionId::R2: {
        const NaeGadgetParams& p = *r.cert.gadget;
        const WeightedGraph& g = source.graph;
        c.expect(r.target.formula.num_vars() == 4 * n + 1, "r2 variable count 4n+1");
        c.expect(p.N == 2 * n + 1 && p.L == 64 * p.N && p.M == 5 * p.delta_max * p.L + 32 * p.N + 1,
                 "r2 constants N, L, M");
        std::size_t expected = 0;
        for (int v = 0; v < n; ++v) {
            const int d = g.support_degree(v);
            expected += static_cast<std::size_t>(d) + static_cast<std::size_t>(2 * n + 1) * (std::size_t{1} << d);
        }
        for (const Edge& e : g.edges()) {
            expected += e.w.is_zero() ? 0 : 1;
        }
        c.expect(r.target.formula.clauses().size() == expected, "r2 clause count");
        break;
    }
    case ReductionId::R3: {
        const Int scale = r.cert.constant("scale");
        for_each_solution(n, 2, [&](const Partition& s) {
            c.expect(tp.cost(s) == Rat(scale) * sp.cost(s), "r3 cost at " + render(s));
        });
        break;
    }
    case ReductionId::R4: {
        const Int shift = r.cert.constant("shift");
        const int h = (n - 1) / 2;
        for_each_solution(n, 2, [&](const Partition& s) {
            if (sp.is_feasible(s)) {
                c.expect(tp.cost(s) == sp.cost(s) + Rat(Int(h * (h + 1)) * shift), "r4 shift at " + render(s));
            }
        });
        break;
    }
    case ReductionId::R5Max:
    case ReductionId::R5Min: {
        const int h = (n - 1) / 2;
        for_each_solution(n, 2, [&](const Partition& s) {
            if (!sp.is_feasible(s)) {
                return;
            }
            if (id == ReductionId::R5Max) {
                c.expect(tp.cost(s) == sp.cost(s), "r5max cost at " + render(s));
            } else {
                const Int k = r.cert.constant("K");
                c.expect(tp.cost(s) == Rat(Int(h * (h + 1)) * k) - sp.cost(s), "r5min cost at " + render(s));
            }
        });
        break;
    }
    case ReductionId::R6: {
        const DensestParams& p = *r.cert.densest;
        const WeightedGraph& h = r.target.graph;
        Int wmin = -1;
        Int wmax = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const Int w = h.weight(u, v);
                wmin = wmin < 0 ? w : std::min(wmin, w);
                wmax = std::max(wmax, w);
            }
        }
        // (1 − 1/s)·w_max ≤ w_min
        c.expect((p.scale - 1) * wmax <= p.scale * wmin, "r6 auxiliary weight spread");
        c.expect(h.n() == n + 2 * static_cast<int>(p.matching_size), "r6 vertex count");
        if (options.corruption != Corruption::UnitMatchingWeight) {
            c.expect(p.matching_weight == n * wmax, "r6 matching weight n·w_max");
        }
        break;
    }
    case ReductionId::R7: {
        const Int we = source.graph.total_weight();
        const PointMatrix& pts = *r.target.witness;
        for_each_solution(n, 2, [&](const Partition& s) {
            const Rat cost = tp.cost(s);
            c.expect(cost == kmeans_point_cost(pts, s), "r7 point vs graph cost at " + render(s));
            const int q = s.count(0);
            const int rr = n - q;
            if (q > 0 && rr > 0) {
                const Rat rhs = Rat(2 * we) - Rat(n * cut_edge_weight(source.graph, s), Int(q * rr));
                c.expect(cost == rhs, "r7 identity 2w(E) - n·w(Q,R)/(qr) at " + render(s));
            }
        });
        break;
    }
    case ReductionId::R8: {
        const auto& e = *r.cert.embedding;
        const Int t2 = e.offset * e.offset;
        const int z = *e.lifted_point;
        for (int y = 0; y < n; ++y) {
            const Int base = y == 0 ? Int(0) : source.graph.weight(0, y);
            c.expect(r.target.graph.weight(y, z) == base + t2, "r8 weight w(z," + std::to_string(y) + ")");
        }
        c.expect(r.target.witness->is_aligned(), "r8 witness alignment");
        break;
    }
    case ReductionId::R9:
    case ReductionId::R10: {
        const Int we = source.graph.total_weight();
        const Int cc = id == ReductionId::R9 ? Int(1) : r.cert.embedding->scale_c;
        const PointMatrix& pts = *r.target.witness;
        if (id == ReductionId::R9 && !we.is_zero()) {
            for (int v = 0; v < n; ++v) {
                c.expect(pts.squared_norm(static_cast<std::size_t>(v)) == Rat(we, Int(2)),
                         "r9 squared norm of row " + std::to_string(v));
            }
        }
        if (id == ReductionId::R10) {
            for (const Rat& a : r.cert.embedding->alpha_radicands) {
                c.expect(a.sign() >= 0, "r10 alpha radicand nonnegative");
            }
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    const Int d = cc * we - source.graph.weight(u, v);
                    c.expect(r.target.graph.weight(u, v) == d, "r10 distance of pair (" + std::to_string(u) + "," +
                                                                   std::to_string(v) + ")");
                    c.expect(pts.squared_distance(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) ==
                                 Rat(d * d),
                             "r10 squared witness distance of pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
                }
            }
        }
        for_each_solution(n, 2, [&](const Partition& s) {
            const int x = s.count(1);
            const Rat expect = Rat(cc * x * (n - x) * we) - Rat(cut_edge_weight(source.graph, s));
            c.expect(tp.cost(s) == expect, rep.reduction + " cut identity at " + render(s));
        });
        break;
    }
    case ReductionId::R11: {
        const Int m = r.cert.constant("M");
        for_each_solution(n, 2, [&](const Partition& s) {
            if (sp.is_feasible(s)) {
                c.expect(tp.cost(s) == Rat(m) - sp.cost(s), "r11 density complement at " + render(s));
            }
        });
        break;
    }
    }
    return rep;
}

} // namespace plslab
