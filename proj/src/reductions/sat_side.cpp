#include "plslab/core/error.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/reductions/reduction.hpp"

#include <algorithm>
#include <map>

namespace plslab {

namespace {

void require_kind(const Instance& source, ProblemTag tag, ReductionId id)
{
    if (source.kind.tag != tag) {
        throw ValidationError(reduction_name(id) + " expects " + kind_name(tag) + ", got " + kind_name(source.kind));
    }
}

void require_valid(const Instance& source, ReductionId id)
{
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

// Neighbour subsets in decreasing size, ties in lexicographic order of neighbour positions.
std::vector<unsigned> subsets_in_gadget_order(std::size_t d)
{
    std::vector<std::vector<std::size_t>> sets;
    for (unsigned mask = 0; mask < (1U << d); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < d; ++i) {
            if ((mask >> i) & 1U) {
                s.push_back(i);
            }
        }
        sets.push_back(std::move(s));
    }
    std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a < b;
    });
    std::vector<unsigned> out;
    for (const auto& s : sets) {
        unsigned mask = 0;
        for (std::size_t i : s) {
            mask |= 1U << i;
        }
        out.push_back(mask);
    }
    return out;
}

Int signed_sum(const std::vector<std::pair<int, Int>>& inc, unsigned mask)
{
    Int s = 0;
    for (std::size_t i = 0; i < inc.size(); ++i) {
        if ((mask >> i) & 1U) {
            s += inc[i].second;
        } else {
            s -= inc[i].second;
        }
    }
    return s;
}

std::map<std::pair<int, int>, Int> pair_weights(const NaeFormula& f)
{
    std::map<std::pair<int, int>, Int> w;
    for (const auto& c : f.merged_pairs()) {
        w[{c.lits[0], c.lits[1]}] = c.w;
    }
    return w;
}

// Zero-weight edges are non-edges for the gadget.
std::vector<std::pair<int, Int>> support(const WeightedGraph& g, int v)
{
    auto inc = g.incident(v);
    std::erase_if(inc, [](const auto& p) { return p.second.is_zero(); });
    return inc;
}

} // namespace

DeltaRange vertex_delta_range(const WeightedGraph& g, int v)
{
    const auto inc = support(g, v);
    if (inc.size() > 5) {
        throw ValidationError("vertex " + std::to_string(v) + " has degree " + std::to_string(inc.size()) + " > 5");
    }
    Int lo = 0;
    Int hi = 0;
    for (unsigned mask = 0; mask < (1U << inc.size()); ++mask) {
        const Int d = abs(signed_sum(inc, mask));
        hi = std::max(hi, d);
        if (!d.is_zero() && (lo.is_zero() || d < lo)) {
            lo = d;
        }
    }
    return {lo.is_zero() ? Int(1) : lo, hi};
}

DeltaRange compute_delta_min_max(const WeightedGraph& g)
{
    Int lo = 0;
    Int hi = 0;
    bool any_nonzero = false;
    for (int v = 0; v < g.n(); ++v) {
        const DeltaRange r = vertex_delta_range(g, v);
        if (r.max.is_zero()) {
            continue;
        }
        hi = std::max(hi, r.max);
        if (!any_nonzero || r.min < lo) {
            lo = r.min;
        }
        any_nonzero = true;
    }
    return {any_nonzero ? lo : Int(1), hi};
}

Reduction r1_distinct(const Instance& source)
{
    require_kind(source, ProblemTag::MaxCutDeg5, ReductionId::R1);
    require_valid(source, ReductionId::R1);
    const WeightedGraph& g = source.graph;
    const int n = g.n();
    int dummies = 0;
    for (int v = 0; v < n; ++v) {
        dummies += g.degree(v) % 2 == 0 ? 1 : 0;
    }
    WeightedGraph h(n + dummies);
    for (const Edge& e : g.edges()) {
        h.set_weight(e.u, e.v, e.w * 10 + 1);
    }
    int next = n;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) % 2 == 0) {
            h.set_weight(v, next++, Int(1));
        }
    }
    Reduction r;
    r.target = Instance::of_graph(ProblemKind{ProblemTag::DistinctMaxCutDeg5}, std::move(h));
    r.cert = make_cert(ReductionId::R1, source, r.target);
    return r;
}

Reduction r2_nae3(const Instance& source, const ReductionOptions& options)
{
    require_kind(source, ProblemTag::DistinctMaxCutDeg5, ReductionId::R2);
    const WeightedGraph& g = source.graph;
    if (g.max_support_degree() > 5) {
        throw ValidationError("r2 needs maximum degree 5");
    }
    if (!options.allow_non_distinct) {
        require_valid(source, ReductionId::R2);
    }
    const int n = g.n();
    NaeGadgetParams p;
    p.n = n;
    const DeltaRange range = compute_delta_min_max(g);
    p.delta_min = range.min;
    p.delta_max = range.max;
    p.N = 2 * n + 1;
    p.L = 64 * p.N;
    p.M = 5 * p.delta_max * p.L + 32 * p.N + 1;
    if (options.corruption == Corruption::GadgetLEqualsM) {
        p.L = p.M;
    }
    const int nn = static_cast<int>(p.N);
    const auto q = [n](int v) { return n + v; };
    const auto a = [n](int i) { return 2 * n + i; };
    for (int v = 0; v < n; ++v) {
        p.var_roles.push_back({VarRole::Level1, v});
    }
    for (int v = 0; v < n; ++v) {
        p.var_roles.push_back({VarRole::Level2, v});
    }
    for (int i = 0; i < nn; ++i) {
        p.var_roles.push_back({VarRole::Level3, i});
    }

    NaeFormula f(4 * n + 1);
    for (const Edge& e : g.edges()) {
        if (!e.w.is_zero()) {
            f.add_clause({e.u, e.v}, p.M * e.w);
        }
    }
    std::vector<std::vector<std::pair<int, Int>>> inc(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        inc[static_cast<std::size_t>(v)] = support(g, v);
        for (const auto& [u, w] : inc[static_cast<std::size_t>(v)]) {
            f.add_clause({q(v), u}, -p.L * w);
        }
    }
    for (int i = 0; i < nn; ++i) {
        for (int v = 0; v < n; ++v) {
            const auto& nv = inc[static_cast<std::size_t>(v)];
            for (unsigned mask : subsets_in_gadget_order(nv.size())) {
                f.add_clause({v, q(v), a(i)}, signed_sum(nv, mask).sign() > 0 ? Int(-1) : Int(0));
            }
        }
    }

    Reduction r;
    r.target = Instance::of_formula(ProblemKind{ProblemTag::OddHalfPosNae3Sat}, std::move(f));
    r.cert = make_cert(ReductionId::R2, source, r.target);
    r.cert.gadget = std::move(p);
    r.cert.corruption = options.corruption;
    return r;
}

Reduction r3_nae3_to_nae2(const Instance& source)
{
    require_kind(source, ProblemTag::OddHalfPosNae3Sat, ReductionId::R3);
    require_valid(source, ReductionId::R3);
    const NaeFormula& f = source.formula;
    Int scale = 1;
    for (const auto& c : f.clauses()) {
        if (c.lits.size() == 3 && c.w % 2 != 0) {
            scale = 2;
        }
    }
    NaeFormula out(f.num_vars());
    for (const auto& c : f.clauses()) {
        if (c.lits.size() == 2) {
            out.add_clause(c.lits, c.w * scale);
            continue;
        }
        const Int half = c.w * scale / 2;
        out.add_clause({c.lits[0], c.lits[1]}, half);
        out.add_clause({c.lits[0], c.lits[2]}, half);
        out.add_clause({c.lits[1], c.lits[2]}, half);
    }
    Reduction r;
    r.target = Instance::of_formula(ProblemKind{ProblemTag::OddHalfPosNae2Sat}, std::move(out));
    r.cert = make_cert(ReductionId::R3, source, r.target);
    r.cert.constants.emplace_back("scale", scale);
    return r;
}

Reduction r4_nonneg(const Instance& source)
{
    require_kind(source, ProblemTag::OddHalfPosNae2Sat, ReductionId::R4);
    require_valid(source, ReductionId::R4);
    const int vars = source.formula.num_vars();
    const auto merged = pair_weights(source.formula);
    Int lowest = 0;
    for (const auto& [pair, w] : merged) {
        lowest = std::min(lowest, w);
    }
    const Int shift = 1 - lowest;
    NaeFormula out(vars);
    for (int a = 0; a < vars; ++a) {
        for (int b = a + 1; b < vars; ++b) {
            auto it = merged.find({a, b});
            out.add_clause({a, b}, (it == merged.end() ? Int(0) : it->second) + shift);
        }
    }
    Reduction r;
    r.target = Instance::of_formula(ProblemKind{ProblemTag::OddHalfPosNae2Sat}, std::move(out));
    r.cert = make_cert(ReductionId::R4, source, r.target);
    r.cert.constants.emplace_back("shift", shift);
    return r;
}

Reduction r5_bisection(const Instance& source, Orientation orient)
{
    const ReductionId id = orient == Orientation::Maximize ? ReductionId::R5Max : ReductionId::R5Min;
    require_kind(source, ProblemTag::OddHalfPosNae2Sat, id);
    require_valid(source, id);
    for (const auto& c : source.formula.clauses()) {
        if (c.w.sign() < 0) {
            throw ValidationError(reduction_name(id) + " needs nonnegative clause weights (apply r4 first)");
        }
    }
    const int n = source.formula.num_vars();
    WeightedGraph g(n);
    Reduction r;
    if (orient == Orientation::Maximize) {
        for (const auto& c : source.formula.merged_pairs()) {
            g.set_weight(c.lits[0], c.lits[1], c.w);
        }
        r.target = Instance::of_graph(ProblemKind{ProblemTag::OddMaxBisection}, std::move(g));
        r.cert = make_cert(id, source, r.target);
        return r;
    }
    const auto merged = pair_weights(source.formula);
    Int k = 0;
    for (const auto& [pair, w] : merged) {
        k = std::max(k, w);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            auto it = merged.find({a, b});
            g.set_weight(a, b, k - (it == merged.end() ? Int(0) : it->second));
        }
    }
    r.target = Instance::of_graph(ProblemKind{ProblemTag::OddMinBisection}, std::move(g));
    r.cert = make_cert(id, source, r.target);
    r.cert.constants.emplace_back("K", k);
    return r;
}

} // namespace plslab
