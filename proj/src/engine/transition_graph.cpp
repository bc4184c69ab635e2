#include "plslab/engine/transition_graph.hpp"

#include "plslab/core/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace plslab {

std::size_t TransitionGraph::arc_count() const
{
    std::size_t a = 0;
    for (const auto& s : succ) {
        a += s.size();
    }
    return a;
}

std::optional<std::size_t> TransitionGraph::find(const Partition& s) const
{
    if (s.size() != n || s.k() != k) {
        return std::nullopt;
    }
    const auto code = s.encode();
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - codes.begin());
}

std::vector<std::size_t> TransitionGraph::sinks() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (is_sink(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::uint64_t default_cap()
{
    if (const char* env = std::getenv("PLSLAB_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultCap;
}

TransitionGraph build_transition_graph(const Problem& problem, std::uint64_t cap)
{
    const Int count = problem.feasible_count();
    if (count > cap) {
        throw CapExceededError(to_string(count) + " feasible solutions exceed the cap of " + std::to_string(cap));
    }
    TransitionGraph tg;
    tg.n = problem.size();
    tg.k = problem.parts();
    const Int raw_count = ipow(Int(tg.k), static_cast<unsigned>(tg.n));
    if (raw_count > Int(std::uint64_t{1} << 62)) {
        throw CapExceededError("raw encoding space too large to scan");
    }
    const auto raw = static_cast<std::uint64_t>(raw_count);
    tg.codes.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t code = 0; code < raw; ++code) {
        const Partition s = Partition::decode(code, tg.n, tg.k);
        if (problem.counts_feasible(s.counts())) {
            tg.codes.push_back(code);
            tg.costs.push_back(problem.cost(s));
        }
    }
    tg.succ.assign(tg.size(), {});
    std::vector<std::vector<std::uint32_t>> pred(tg.size());
    for (std::size_t i = 0; i < tg.size(); ++i) {
        const Partition s = tg.node(i);
        for (const auto& [e, t] : problem.moves(s)) {
            const auto j = *tg.find(s.moved(e, t));
            if (problem.better(tg.costs[j], tg.costs[i])) {
                tg.succ[i].push_back(static_cast<std::uint32_t>(j));
                pred[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }

    // Kahn's algorithm over out-degrees from the sinks backwards.
    std::vector<std::size_t> outdeg(tg.size());
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < tg.size(); ++i) {
        outdeg[i] = tg.succ[i].size();
        if (outdeg[i] == 0) {
            queue.push_back(i);
        }
    }
    std::size_t removed = 0;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        ++removed;
        for (auto u : pred[v]) {
            if (--outdeg[u] == 0) {
                queue.push_back(u);
            }
        }
    }
    tg.acyclic = removed == tg.size();

    tg.heights.assign(tg.size(), -1);
    for (std::size_t i = 0; i < tg.size(); ++i) {
        if (tg.is_sink(i)) {
            tg.heights[i] = 0;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (auto u : pred[v]) {
            if (tg.heights[u] < 0) {
                tg.heights[u] = tg.heights[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return tg;
}

TransitionGraph build_transition_graph(const Instance& instance, std::uint64_t cap)
{
    return build_transition_graph(Problem(instance), cap);
}

} // namespace plslab
