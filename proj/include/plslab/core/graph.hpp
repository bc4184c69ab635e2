#pragma once

#include "plslab/core/int.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace plslab {

struct Edge {
    int u = 0; // always u < v
    int v = 0;
    Int w;
    /// Zero-weight edge that still counts toward degree and parity.
    bool explicit_zero = false;
};

/// Undirected simple graph on vertices 0..n-1 with unbounded integer weights.
///
/// Absent pairs have weight 0. A stored edge is either nonzero or an explicit zero edge;
/// setting a plain pair to 0 removes it. Edges keep their insertion order.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n);

    int n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sets w(uv). A zero weight removes the pair unless `explicit_zero` is set.
    void set_weight(int u, int v, const Int& w, bool explicit_zero = false);
    void add_to_weight(int u, int v, const Int& delta);
    Int weight(int u, int v) const;
    bool has_edge(int u, int v) const;

    /// Incident stored edges of v as (neighbour, weight), neighbours ascending.
    std::vector<std::pair<int, Int>> incident(int v) const;
    /// Number of stored incident edges (explicit zero edges count).
    int degree(int v) const;
    int max_degree() const;
    /// Incident edges of nonzero weight; the degree bound of the Deg5 kinds counts only these.
    int support_degree(int v) const;
    int max_support_degree() const;
    /// w(δ(v))
    Int weighted_degree(int v) const;
    /// w(E)
    Int total_weight() const;
    Int max_weight() const;
    Int min_weight() const;
    Int max_abs_weight() const;
    bool is_nonnegative() const;
    bool is_complete() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    void check_pair(int u, int v) const;
    void rebuild_index();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, std::size_t> index_;
};

} // namespace plslab
