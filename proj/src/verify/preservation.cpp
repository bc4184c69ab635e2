#include "plslab/core/error.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/verify/checks.hpp"
#include "plslab/verify/scan.hpp"
#include "scan_state.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <random>
#include <sstream>

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

constexpr std::size_t kMaxMessages = 100;

void add_violation(std::vector<std::string>& out, std::string msg)
{
    if (out.size() < kMaxMessages) {
        out.push_back(std::move(msg));
    }
}

} // namespace

std::string instance_digest(const Instance& inst)
{
    std::ostringstream os;
    os << kind_name(inst.kind) << '|' << inst.size() << '|';
    for (const Edge& e : inst.graph.edges()) {
        os << e.u << ',' << e.v << ',' << e.w << (e.explicit_zero ? "z" : "") << ';';
    }
    os << '|';
    for (const auto& c : inst.formula.clauses()) {
        for (int x : c.lits) {
            os << x << ',';
        }
        os << c.w << ';';
    }
    if (inst.witness) {
        os << '|';
        for (const auto& row : inst.witness->rows()) {
            for (const SqrtCoord& x : row) {
                os << x.sign << ':' << x.radicand.to_string() << ',';
            }
            os << ';';
        }
    }
    const std::string text = os.str();
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

PreservationReport check_preservation_with(const Instance& source, const Instance& target,
                                           const std::function<Partition(const Partition&)>& g,
                                           std::uint64_t cap)
{
    PreservationReport rep;
    rep.digest = instance_digest(source);
    const Problem sp(source);
    for (const Partition& t : enumerate_local_optima(target, cap)) {
        ++rep.sinks_checked;
        Partition s = g(t);
        if (auto m = improving_move(sp, s)) {
            rep.violations.push_back({t, std::move(s), std::move(*m)});
        }
    }
    return rep;
}

PreservationReport check_preservation(ReductionId id, const Instance& source, std::uint64_t cap,
                                      const ReductionOptions& options)
{
    const Reduction r = reduce(id, source, options);
    PreservationReport rep = check_preservation_with(
        source, r.target, [&](const Partition& t) { return r.cert.map_solution(t); }, cap);
    rep.reduction = reduction_name(id);
    rep.oracle_mode = r.cert.densest && r.cert.densest->oracle_mode;
    return rep;
}

PreservationReport check_chain_preservation(const Instance& source, const std::vector<ReductionId>& path,
                                            std::uint64_t cap, const ReductionOptions& options)
{
    const ChainResult r = chain_reduce(source, path, options);
    PreservationReport rep = check_preservation_with(
        source, r.target, [&](const Partition& t) { return r.cert.map_solution(t); }, cap);
    for (std::size_t i = 0; i < path.size(); ++i) {
        rep.reduction += (i ? "," : "") + reduction_name(path[i]);
    }
    return rep;
}

PreservationReport check_r6_sampled(const Instance& source, std::uint64_t samples, std::uint64_t searches,
                                    std::uint64_t seed)
{
    const Reduction r = r6_densest(source);
    const Problem sp(source);
    const WeightedGraph& g = r.target.graph;
    const int n = g.n();
    std::vector<std::tuple<int, int, Int>> edges;
    Int abs_total = 0;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(e.u, e.v, e.w);
        abs_total += abs(e.w);
    }
    if (abs_total * Int(n + 2) * Int(n + 2) >= (Int(1) << 120) || abs_total >= (Int(1) << 60)) {
        throw CapExceededError("r6 target weights too large for the sampled search");
    }
    PreservationReport rep;
    rep.reduction = "r6";
    rep.digest = instance_digest(source);
    rep.sampled = true;
    rep.solutions_sampled = samples;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);

    const auto check_sink = [&](const detail::CutState<std::int64_t>& st) {
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            labels[static_cast<std::size_t>(v)] = st.label(v);
        }
        const Partition t(std::move(labels), 2);
        ++rep.sinks_checked;
        Partition s = r.cert.map_solution(t);
        if (!r.cert.is_reasonable(t)) {
            rep.violations.push_back({t, s, Move{-1, -1, Rat()}});
            return;
        }
        if (auto m = improving_move(sp, s)) {
            rep.violations.push_back({t, std::move(s), std::move(*m)});
        }
    };

    for (std::uint64_t i = 0; i < samples; ++i) {
        detail::CutState<std::int64_t> st(n, edges, true, detail::SideRule::BothNonempty, true);
        int ones = 0;
        for (int v = 0; v < n; ++v) {
            if (coin(rng)) {
                st.move(v, 1);
                ++ones;
            }
        }
        if (ones == 0 || ones == n) {
            st.move(0, ones == 0 ? 1 : 0);
        }
        if (st.is_sink()) {
            check_sink(st);
        }
        if (i < searches) {
            while (auto v = st.improving_vertex()) {
                st.move(*v, 1 - st.label(*v));
            }
            check_sink(st);
        }
    }
    return rep;
}

TightnessReport check_tightness(ReductionId id, const Instance& source, std::uint64_t cap,
                                const ReductionOptions& options)
{
    const Reduction r = reduce(id, source, options);
    const Problem sp(source);
    const Problem tp(r.target);
    const TransitionGraph ts = build_transition_graph(sp, cap);
    const TransitionGraph tt = build_transition_graph(tp, cap);
    TightnessReport rep;
    rep.reduction = reduction_name(id);
    rep.digest = instance_digest(source);
    rep.source_nodes = ts.size();
    rep.target_nodes = tt.size();
    auto& out = rep.violations;

    std::vector<char> in_r(tt.size(), 0);
    std::vector<std::size_t> image(tt.size(), 0);
    for (std::size_t i = 0; i < tt.size(); ++i) {
        const Partition t = tt.node(i);
        in_r[i] = r.cert.is_reasonable(t) ? 1 : 0;
        rep.reasonable_nodes += static_cast<std::size_t>(in_r[i]);
        const auto j = ts.find(r.cert.map_solution(t));
        if (!j) {
            add_violation(out, "g(" + render(t) + ") is not a feasible source solution");
            return rep;
        }
        image[i] = *j;
    }

    for (std::size_t i : tt.sinks()) {
        if (!in_r[i]) {
            add_violation(out, "sink " + render(tt.node(i)) + " lies outside R");
        }
    }

    std::vector<char> covered(ts.size(), 0);
    for (std::size_t i = 0; i < tt.size(); ++i) {
        if (in_r[i]) {
            covered[image[i]] = 1;
        }
    }
    for (std::size_t j = 0; j < ts.size(); ++j) {
        if (!covered[j]) {
            add_violation(out, "source solution " + render(ts.node(j)) + " is not g of any reasonable solution");
        }
    }

    const bool whole_space = id == ReductionId::R3 || id == ReductionId::R4 || id == ReductionId::R5Max ||
                             id == ReductionId::R5Min || id == ReductionId::R11;
    if (whole_space && (rep.reasonable_nodes != tt.size() || tt.size() != ts.size())) {
        add_violation(out, "transition graphs differ in size: " + std::to_string(tt.size()) + " target vs " +
                               std::to_string(ts.size()) + " source");
    }

    // Reductions whose restricted transition graph is claimed isomorphic to the source one.
    const bool isomorphic = whole_space || id == ReductionId::R7 || id == ReductionId::R8 ||
                            id == ReductionId::R9 || id == ReductionId::R10;
    for (std::size_t i = 0; isomorphic && i < tt.size(); ++i) {
        if (!in_r[i]) {
            continue;
        }
        std::vector<std::size_t> mapped;
        for (auto j : tt.succ[i]) {
            if (in_r[j]) {
                mapped.push_back(image[j]);
            }
        }
        std::sort(mapped.begin(), mapped.end());
        std::vector<std::size_t> expect(ts.succ[image[i]].begin(), ts.succ[image[i]].end());
        std::sort(expect.begin(), expect.end());
        if (mapped != expect) {
            add_violation(out, "arcs out of " + render(tt.node(i)) + " do not map one-to-one onto the arcs out of " +
                                   render(ts.node(image[i])));
        }
    }

    // Paths that leave R must come back to R at g-equal or g-adjacent solutions.
    for (std::size_t i = 0; i < tt.size(); ++i) {
        if (!in_r[i]) {
            continue;
        }
        std::vector<char> seen(tt.size(), 0);
        std::deque<std::size_t> queue;
        const auto& arcs = ts.succ[image[i]];
        auto check_return = [&](std::size_t j, const char* via) {
            const bool adjacent = std::find(arcs.begin(), arcs.end(), image[j]) != arcs.end();
            if (image[i] != image[j] && !adjacent) {
                add_violation(out, std::string(via) + " " + render(tt.node(i)) + " ~> " + render(tt.node(j)) +
                                       " has no source counterpart");
            }
        };
        for (auto j : tt.succ[i]) {
            if (in_r[j]) {
                check_return(j, "arc");
            } else if (!seen[j]) {
                seen[j] = 1;
                queue.push_back(j);
            }
        }
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (auto j : tt.succ[x]) {
                if (seen[j]) {
                    continue;
                }
                seen[j] = 1;
                if (!in_r[j]) {
                    queue.push_back(j);
                    continue;
                }
                check_return(j, "path through non-reasonable solutions");
            }
        }
    }

    if (isomorphic && !whole_space) {
        for (std::size_t i = 0; i < tt.size(); ++i) {
            if (!in_r[i]) {
                continue;
            }
            const Partition t = tt.node(i);
            for (const auto& [e, target] : tp.moves(t)) {
                const auto j = *tt.find(t.moved(e, target));
                if (!in_r[j] && !tp.better(tt.costs[i], tt.costs[j])) {
                    add_violation(out, "leaving R from " + render(t) + " by moving " + std::to_string(e) +
                                           " does not strictly worsen the cost");
                }
            }
        }
    }
    return rep;
}

} // namespace plslab
