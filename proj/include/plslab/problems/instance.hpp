#pragma once

#include "plslab/core/graph.hpp"
#include "plslab/core/point_matrix.hpp"
#include "plslab/problems/kind.hpp"
#include "plslab/problems/nae_formula.hpp"

#include <optional>

namespace plslab {

/// One problem instance. Graph kinds use `graph`, NAE kinds use `formula`; the
/// witness certifies (squared) Euclidean and k-Means weights when present.
struct Instance {
    ProblemKind kind;
    WeightedGraph graph;
    NaeFormula formula;
    std::optional<PointMatrix> witness;

    /// Number of elements a solution labels (vertices, variables or points).
    int size() const;

    static Instance of_graph(ProblemKind kind, WeightedGraph g);
    static Instance of_formula(ProblemKind kind, NaeFormula f);

    friend bool operator==(const Instance& a, const Instance& b) = default;
};

} // namespace plslab
