#include "plslab/core/error.hpp"
#include "plslab/verify/checks.hpp"

#include <algorithm>

namespace plslab {

namespace {

void check_cut_cap(int n, std::uint64_t cap)
{
    if (n >= 63 || (std::uint64_t{1} << n) > cap) {
        throw CapExceededError("2^" + std::to_string(n) + " cuts exceed the cap of " + std::to_string(cap));
    }
}

// Reflected binary Gray code: calls visit(code) for every cut, flip(v) between consecutive cuts.
template <typename Flip, typename Visit>
void gray_cuts(int n, Flip flip, Visit visit)
{
    std::uint64_t code = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1;; ++step) {
        if (!visit(code)) {
            return;
        }
        if (step == total) {
            return;
        }
        const int v = __builtin_ctzll(step);
        flip(v);
        code ^= std::uint64_t{1} << v;
    }
}

template <typename T>
DistinctResult distinct_scan(const WeightedGraph& g)
{
    const int n = g.n();
    std::vector<std::vector<std::pair<int, T>>> adj(static_cast<std::size_t>(n));
    std::vector<T> gain(static_cast<std::size_t>(n), T(0));
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        const T w = static_cast<T>(e.w);
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, w);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, w);
        gain[static_cast<std::size_t>(e.u)] += w;
        gain[static_cast<std::size_t>(e.v)] += w;
    }
    int zeros = 0;
    for (const T& x : gain) {
        zeros += x == 0 ? 1 : 0;
    }
    DistinctResult res;
    const auto flip = [&](int v) {
        const auto vi = static_cast<std::size_t>(v);
        for (const auto& [u, w] : adj[vi]) {
            const auto ui = static_cast<std::size_t>(u);
            zeros -= gain[ui] == 0 ? 1 : 0;
            gain[ui] += side[ui] == side[vi] ? T(-2 * w) : T(2 * w);
            zeros += gain[ui] == 0 ? 1 : 0;
        }
        gain[vi] = -gain[vi];
        side[vi] = 1 - side[vi];
    };
    const auto visit = [&](std::uint64_t code) {
        if (zeros == 0) {
            return true;
        }
        res.distinct = false;
        res.cut = Partition::decode(code, n, 2);
        for (int v = 0; v < n; ++v) {
            if (gain[static_cast<std::size_t>(v)] == 0) {
                res.vertex = v;
                break;
            }
        }
        return false;
    };
    gray_cuts(n, flip, visit);
    return res;
}

} // namespace

DistinctResult check_distinct_costs(const WeightedGraph& g, std::uint64_t cap)
{
    check_cut_cap(g.n(), cap);
    if (g.n() == 0) {
        return {};
    }
    Int total = 0;
    for (const Edge& e : g.edges()) {
        total += abs(e.w);
    }
    if (total < (Int(1) << 60)) {
        return distinct_scan<std::int64_t>(g);
    }
    return distinct_scan<Int>(g);
}

std::string vertex_type_name(VertexType t)
{
    switch (t) {
    case VertexType::TypeI:
        return "TypeI";
    case VertexType::TypeII:
        return "TypeII";
    case VertexType::TypeIII:
        return "TypeIII";
    default:
        return "Other";
    }
}

VertexTypeReport classify_vertex(const WeightedGraph& g, int v)
{
    const auto inc = g.incident(v);
    if (inc.size() > 4) {
        throw ValidationError("vertex types are defined for degree <= 4; vertex " + std::to_string(v) + " has degree " +
                              std::to_string(inc.size()));
    }
    VertexTypeReport rep;
    rep.vertex = v;
    std::vector<Int> w(4, Int(0));
    for (std::size_t i = 0; i < inc.size(); ++i) {
        w[i] = inc[i].second;
    }
    std::sort(w.begin(), w.end(), [](const Int& x, const Int& y) { return x > y; });
    const Int &a = w[0], &b = w[1], &c = w[2], &d = w[3];
    rep.sorted_incident = {a, b, c, d};
    if (a > b + c + d) {
        rep.vtype = VertexType::TypeI;
    } else if (a + d > b + c && a < b + c + d) {
        rep.vtype = VertexType::TypeII;
    } else if (a + d < b + c) {
        rep.vtype = VertexType::TypeIII;
    } else {
        rep.vtype = VertexType::Other;
    }
    return rep;
}

bool check_typed_flip_distinct(const WeightedGraph& g, int v, std::uint64_t cap)
{
    if (classify_vertex(g, v).vtype == VertexType::Other) {
        throw ValidationError("vertex " + std::to_string(v) + " is of type Other; typed-flip distinctness does not apply");
    }
    check_cut_cap(g.n(), cap);
    const int n = g.n();
    std::vector<Int> link(static_cast<std::size_t>(n), Int(0));
    for (const auto& [u, w] : g.incident(v)) {
        link[static_cast<std::size_t>(u)] = w;
    }
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    // gain of flipping v: Σ same-side weights − Σ other-side weights
    Int gain = g.weighted_degree(v);
    bool ok = true;
    const auto flip = [&](int u) {
        const auto ui = static_cast<std::size_t>(u);
        if (u == v) {
            gain = -gain;
        } else if (!link[ui].is_zero()) {
            gain += side[ui] == side[static_cast<std::size_t>(v)] ? Int(-2 * link[ui]) : Int(2 * link[ui]);
        }
        side[ui] = 1 - side[ui];
    };
    const auto visit = [&](std::uint64_t) {
        if (gain.is_zero()) {
            ok = false;
        }
        return ok;
    };
    gray_cuts(n, flip, visit);
    return ok;
}

} // namespace plslab
