#pragma once

#include "plslab/core/partition.hpp"
#include "plslab/core/rat.hpp"
#include "plslab/problems/problem.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace plslab {

enum class PivotRule {
    /// Lowest element id, then lowest target part.
    FirstImprovement,
    /// Largest improvement; ties go to the lowest element id, then the lowest target.
    BestImprovement,
};

struct Move {
    int element = 0;
    int target = 0;
    Rat delta;

    friend bool operator==(const Move& a, const Move& b) = default;
};

struct SearchTrace {
    Partition start;
    std::vector<Move> moves;
    Partition final_solution;
    std::size_t iterations = 0;
    /// Set when the iteration cap stopped the run before a local optimum.
    bool truncated = false;

    friend bool operator==(const SearchTrace& a, const SearchTrace& b) = default;
};

/// Deterministic start: first ⌈n/2⌉ elements on side X / true, or point i in cluster i mod k.
Partition initial_solution(const Instance& instance);
Partition initial_solution(const ProblemKind& kind, int n);

std::optional<Move> improving_move(const Problem& problem, const Partition& s,
                                   PivotRule rule = PivotRule::FirstImprovement);
bool is_local_optimum(const Problem& problem, const Partition& s);

SearchTrace run_local_search(const Problem& problem, const Partition& start,
                             PivotRule rule = PivotRule::FirstImprovement,
                             std::optional<std::size_t> max_iterations = std::nullopt);

/// Local optimum reached from initial_solution() under `rule`.
Partition standard_solution(const Problem& problem, PivotRule rule = PivotRule::FirstImprovement);

std::optional<Move> improving_move(const Instance& instance, const Partition& s,
                                   PivotRule rule = PivotRule::FirstImprovement);
bool is_local_optimum(const Instance& instance, const Partition& s);
SearchTrace run_local_search(const Instance& instance, const Partition& start,
                             PivotRule rule = PivotRule::FirstImprovement,
                             std::optional<std::size_t> max_iterations = std::nullopt);
Partition standard_solution(const Instance& instance, PivotRule rule = PivotRule::FirstImprovement);

} // namespace plslab
