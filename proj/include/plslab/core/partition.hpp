#pragma once

#include "plslab/core/graph.hpp"

#include <cstdint>
#include <vector>

namespace plslab {

/// Labelled partition of elements 0..n-1 into k parts.
///
/// A bipartition is the k = 2 case with label 1 meaning side X (or "true" for an
/// assignment). Clusterings use k parts and may leave parts empty.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> labels, int k);

    static Partition bipartition(const std::vector<bool>& side);
    /// Decodes the mixed-radix code produced by encode() (element 0 least significant).
    static Partition decode(std::uint64_t code, int n, int k);

    int size() const { return static_cast<int>(labels_.size()); }
    int k() const { return k_; }
    int label(int element) const;
    bool side(int element) const { return label(element) == 1; }
    const std::vector<int>& labels() const { return labels_; }
    int count(int label) const;
    std::vector<int> counts() const;

    /// Copy with `element` relabelled to `target`.
    Partition moved(int element, int target) const;
    std::uint64_t encode() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> labels_;
    int k_ = 2;
};

/// Copy of a bipartition with side(v) toggled.
Partition flip(const Partition& p, int v);

/// Σ w(uv) over pairs placed in different parts.
Int cut_edge_weight(const WeightedGraph& g, const Partition& p);

} // namespace plslab
