#include "plslab/verify/scan.hpp"

#include "plslab/core/error.hpp"
#include "plslab/problems/problem.hpp"
#include "scan_state.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace plslab {

namespace {

using detail::CutState;
using detail::KMeansState;
using detail::NaeState;
using detail::SideRule;

SideRule side_rule(ProblemTag tag)
{
    if (is_odd_balanced(tag)) {
        return SideRule::OddBalanced;
    }
    if (is_density_kind(tag)) {
        return SideRule::BothNonempty;
    }
    return SideRule::Any;
}

// Visits all k^n labellings; each step moves one element by ±1 (reflected mixed-radix Gray code).
// `order` maps Gray digit positions to elements so that cheap elements change most often.
template <typename State>
std::vector<Partition> gray_scan(State& state, int k, const std::vector<int>& order)
{
    const int n = state.size();
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    std::vector<int> dir(static_cast<std::size_t>(n), 1);
    std::vector<std::uint64_t> codes;
    std::vector<std::uint64_t> pow(static_cast<std::size_t>(n), 1);
    for (int i = 1; i < n; ++i) {
        pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(k);
    }
    std::uint64_t code = 0;
    while (true) {
        if (state.feasible() && state.is_sink()) {
            codes.push_back(code);
        }
        int i = 0;
        while (i < n) {
            const auto ii = static_cast<std::size_t>(i);
            const int next = digit[ii] + dir[ii];
            if (next >= 0 && next < k) {
                const int element = order[ii];
                state.move(element, next);
                const auto p = pow[static_cast<std::size_t>(element)];
                code = code - static_cast<std::uint64_t>(digit[ii]) * p + static_cast<std::uint64_t>(next) * p;
                digit[ii] = next;
                break;
            }
            dir[ii] = -dir[ii];
            ++i;
        }
        if (i == n) {
            break;
        }
    }
    std::sort(codes.begin(), codes.end());
    std::vector<Partition> out;
    out.reserve(codes.size());
    for (auto c : codes) {
        out.push_back(Partition::decode(c, n, k));
    }
    return out;
}

std::vector<int> order_by_cost(const std::vector<std::size_t>& cost)
{
    std::vector<int> order(cost.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cost[static_cast<std::size_t>(a)] < cost[static_cast<std::size_t>(b)]; });
    return order;
}

bool fits_fast(const Int& abs_total, int n)
{
    const Int limit60 = Int(1) << 58;
    const Int limit120 = Int(1) << 118;
    Int f = n + 2;
    f = f * f * f * f;
    return abs_total < limit60 && abs_total * f < limit120;
}

template <typename T>
std::vector<Partition> scan_graph(const Instance& inst, std::vector<std::tuple<int, int, Int>> edges, bool maximize,
                                  SideRule rule, bool density)
{
    const int n = inst.size();
    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v, w] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    if (inst.kind.tag == ProblemTag::KMeans) {
        KMeansState<T> st(n, inst.kind.k, edges);
        return gray_scan(st, inst.kind.k, order_by_cost(deg));
    }
    CutState<T> st(n, edges, maximize, rule, density);
    return gray_scan(st, 2, order_by_cost(deg));
}

template <typename T>
std::vector<Partition> scan_nae(const Instance& inst, const std::vector<std::pair<std::vector<int>, Int>>& clauses)
{
    const int n = inst.size();
    std::vector<std::size_t> occ(static_cast<std::size_t>(n), 0);
    for (const auto& [lits, w] : clauses) {
        for (int x : lits) {
            occ[static_cast<std::size_t>(x)] += lits.size();
        }
    }
    NaeState<T> st(n, clauses, side_rule(inst.kind.tag));
    return gray_scan(st, 2, order_by_cost(occ));
}

} // namespace

std::vector<Partition> enumerate_local_optima(const Instance& inst, std::uint64_t cap)
{
    Problem problem(inst);
    const Int count = problem.feasible_count();
    if (count > cap) {
        throw CapExceededError(to_string(count) + " feasible solutions exceed the cap of " + std::to_string(cap));
    }
    const int n = inst.size();
    const ProblemTag tag = inst.kind.tag;
    if (n == 0) {
        return {Partition({}, part_count(inst.kind))};
    }
    if (is_nae(tag)) {
        // Clauses over the same variable set act as one clause of the summed weight.
        std::map<std::vector<int>, Int> merged;
        std::vector<std::vector<int>> first_seen;
        for (const auto& c : inst.formula.clauses()) {
            auto lits = c.lits;
            std::sort(lits.begin(), lits.end());
            auto [it, fresh] = merged.try_emplace(lits, Int(0));
            if (fresh) {
                first_seen.push_back(lits);
            }
            it->second += c.w;
        }
        const bool pairs_only = inst.formula.max_clause_size() <= 2;
        Int abs_total = 0;
        std::vector<std::pair<std::vector<int>, Int>> clauses;
        std::vector<std::tuple<int, int, Int>> edges;
        for (const auto& lits : first_seen) {
            const Int& w = merged[lits];
            if (w.is_zero()) {
                continue;
            }
            abs_total += abs(w);
            if (pairs_only) {
                edges.emplace_back(lits[0], lits[1], w);
            } else {
                clauses.emplace_back(lits, w);
            }
        }
        const bool fast = fits_fast(abs_total, n);
        if (pairs_only) {
            return fast ? scan_graph<std::int64_t>(inst, edges, true, side_rule(tag), false)
                        : scan_graph<Int>(inst, edges, true, side_rule(tag), false);
        }
        return fast ? scan_nae<std::int64_t>(inst, clauses) : scan_nae<Int>(inst, clauses);
    }
    std::vector<std::tuple<int, int, Int>> edges;
    Int abs_total = 0;
    for (const Edge& e : inst.graph.edges()) {
        if (!e.w.is_zero()) {
            edges.emplace_back(e.u, e.v, e.w);
            abs_total += abs(e.w);
        }
    }
    const bool maximize = orientation(tag) == Orientation::Maximize;
    const bool density = is_density_kind(tag);
    return fits_fast(abs_total, n) ? scan_graph<std::int64_t>(inst, edges, maximize, side_rule(tag), density)
                                   : scan_graph<Int>(inst, edges, maximize, side_rule(tag), density);
}

} // namespace plslab
