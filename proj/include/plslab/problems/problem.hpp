#pragma once

#include "plslab/core/partition.hpp"
#include "plslab/core/rat.hpp"
#include "plslab/problems/instance.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plslab {

/// Evaluator for one instance: feasibility, exact cost and Flip moves.
///
/// Adjacency and clause occurrence lists are built once, so repeated delta queries
/// only touch the moved element's neighbourhood.
class Problem {
public:
    explicit Problem(Instance instance);

    const Instance& instance() const { return instance_; }
    const ProblemKind& kind() const { return instance_.kind; }
    int size() const { return instance_.size(); }
    int parts() const { return part_count(instance_.kind); }
    Orientation orientation() const { return plslab::orientation(instance_.kind.tag); }

    /// Throws DimensionError when the solution does not fit the instance.
    void check_shape(const Partition& s) const;
    bool is_feasible(const Partition& s) const;
    /// Feasibility depends only on the part sizes.
    bool counts_feasible(const std::vector<int>& counts) const;
    bool can_move(const Partition& s, int element, int target) const;

    Rat cost(const Partition& s) const;
    Rat flip_delta(const Partition& s, int element, int target) const;
    /// Strict improvement in this problem's orientation.
    bool improves(const Rat& delta) const;
    /// True when cost `a` is strictly better than cost `b`.
    bool better(const Rat& a, const Rat& b) const;

    /// Feasible (element, target) moves in scan order.
    std::vector<std::pair<int, int>> moves(const Partition& s) const;
    std::vector<Partition> neighbors(const Partition& s) const;

    /// Number of feasible solutions, counted combinatorially.
    Int feasible_count() const;

    const std::vector<std::vector<std::pair<int, Int>>>& adjacency() const { return adj_; }

private:
    Int cut_gain(const Partition& s, int v) const;
    Int cluster_sum(const Partition& s, int label) const;
    Int link_weight(const Partition& s, int v, int label) const;

    Instance instance_;
    std::vector<std::vector<std::pair<int, Int>>> adj_;
    std::vector<std::vector<std::size_t>> occurrences_;
};

/// Feasibility from the part sizes alone (odd balance, nonempty density sides).
bool counts_feasible(ProblemTag tag, const std::vector<int>& counts);

bool is_feasible(const Instance& instance, const Partition& s);
Rat cost(const Instance& instance, const Partition& s);
Rat flip_delta(const Instance& instance, const Partition& s, int element, int target);
std::vector<Partition> neighbors(const Instance& instance, const Partition& s);

/// Human-readable violations; empty means the instance is well formed for its kind.
std::vector<std::string> validate_instance(const Instance& instance);

/// k-Means cost in the point formulation: Σ_i Σ_{x∈C_i} ‖x − cm(C_i)‖², exact.
Rat kmeans_point_cost(const PointMatrix& points, const Partition& clustering);

} // namespace plslab
