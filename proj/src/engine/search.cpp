#include "plslab/engine/search.hpp"

#include "plslab/core/error.hpp"

namespace plslab {

Partition initial_solution(const ProblemKind& kind, int n)
{
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    if (kind.tag == ProblemTag::KMeans) {
        if (kind.k < 2) {
            throw ValidationError("k-Means needs k >= 2");
        }
        for (int i = 0; i < n; ++i) {
            labels[static_cast<std::size_t>(i)] = i % kind.k;
        }
        return Partition(std::move(labels), kind.k);
    }
    for (int i = 0; i < (n + 1) / 2; ++i) {
        labels[static_cast<std::size_t>(i)] = 1;
    }
    Partition s(std::move(labels), 2);
    if (!counts_feasible(kind.tag, s.counts())) {
        throw ValidationError("no feasible start for " + kind_name(kind) + " with n=" + std::to_string(n));
    }
    return s;
}

Partition initial_solution(const Instance& instance)
{
    return initial_solution(instance.kind, instance.size());
}

std::optional<Move> improving_move(const Problem& problem, const Partition& s, PivotRule rule)
{
    std::optional<Move> best;
    for (const auto& [e, t] : problem.moves(s)) {
        Rat d = problem.flip_delta(s, e, t);
        if (!problem.improves(d)) {
            continue;
        }
        if (rule == PivotRule::FirstImprovement) {
            return Move{e, t, std::move(d)};
        }
        if (!best || problem.better(d, best->delta)) {
            best = Move{e, t, std::move(d)};
        }
    }
    return best;
}

bool is_local_optimum(const Problem& problem, const Partition& s)
{
    return !improving_move(problem, s, PivotRule::FirstImprovement).has_value();
}

SearchTrace run_local_search(const Problem& problem, const Partition& start, PivotRule rule,
                             std::optional<std::size_t> max_iterations)
{
    if (!problem.is_feasible(start)) {
        throw ValidationError("local search started from an infeasible solution");
    }
    SearchTrace trace;
    trace.start = start;
    Partition cur = start;
    while (auto m = improving_move(problem, cur, rule)) {
        if (max_iterations && trace.iterations >= *max_iterations) {
            trace.truncated = true;
            break;
        }
        cur = cur.moved(m->element, m->target);
        trace.moves.push_back(std::move(*m));
        ++trace.iterations;
    }
    trace.final_solution = std::move(cur);
    return trace;
}

Partition standard_solution(const Problem& problem, PivotRule rule)
{
    return run_local_search(problem, initial_solution(problem.instance()), rule).final_solution;
}

std::optional<Move> improving_move(const Instance& instance, const Partition& s, PivotRule rule)
{
    return improving_move(Problem(instance), s, rule);
}

bool is_local_optimum(const Instance& instance, const Partition& s)
{
    return is_local_optimum(Problem(instance), s);
}

SearchTrace run_local_search(const Instance& instance, const Partition& start, PivotRule rule,
                             std::optional<std::size_t> max_iterations)
{
    return run_local_search(Problem(instance), start, rule, max_iterations);
}

Partition standard_solution(const Instance& instance, PivotRule rule)
{
    return standard_solution(Problem(instance), rule);
}

} // namespace plslab
