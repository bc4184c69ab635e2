#pragma once

#include "plslab/core/partition.hpp"
#include "plslab/core/rat.hpp"
#include "plslab/problems/problem.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace plslab {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

/// Exhaustive transition graph T(x): one node per feasible solution, one arc per strictly
/// improving Flip move.
struct TransitionGraph {
    int n = 0;
    int k = 2;
    /// Node encodings (Partition::encode) in ascending order.
    std::vector<std::uint64_t> codes;
    std::vector<Rat> costs;
    std::vector<std::vector<std::uint32_t>> succ;
    /// Shortest distance to a sink; -1 only if the graph had a cycle.
    std::vector<int> heights;
    bool acyclic = true;

    std::size_t size() const { return codes.size(); }
    std::size_t arc_count() const;
    Partition node(std::size_t i) const { return Partition::decode(codes[i], n, k); }
    std::optional<std::size_t> find(const Partition& s) const;
    bool is_sink(std::size_t i) const { return succ[i].empty(); }
    std::vector<std::size_t> sinks() const;
};

/// Cap from PLSLAB_CAP if set and valid, else kDefaultCap.
std::uint64_t default_cap();

/// Throws CapExceededError when the instance has more than `cap` feasible solutions.
TransitionGraph build_transition_graph(const Problem& problem, std::uint64_t cap = kDefaultCap);
TransitionGraph build_transition_graph(const Instance& instance, std::uint64_t cap = kDefaultCap);

} // namespace plslab
