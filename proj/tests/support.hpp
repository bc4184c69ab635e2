#pragma once

#include "plslab/core/graph.hpp"
#include "plslab/core/partition.hpp"
#include "plslab/problems/instance.hpp"

#include <tuple>
#include <vector>

namespace plslab::test {

inline WeightedGraph graph(int n, const std::vector<std::tuple<int, int, int>>& edges)
{
    WeightedGraph g(n);
    for (const auto& [u, v, w] : edges) {
        g.set_weight(u, v, Int(w), w == 0);
    }
    return g;
}

inline WeightedGraph complete(int n, int w = 1)
{
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.set_weight(u, v, Int(w));
        }
    }
    return g;
}

inline Instance of(ProblemTag tag, WeightedGraph g)
{
    return Instance::of_graph(ProblemKind{tag}, std::move(g));
}

/// Side-1 set as a 0/1 labelling.
inline Partition cut(int n, const std::vector<int>& side1)
{
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (int v : side1) {
        labels[static_cast<std::size_t>(v)] = 1;
    }
    return Partition(labels, 2);
}

} // namespace plslab::test
