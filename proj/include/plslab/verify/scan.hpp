#pragma once

#include "plslab/core/partition.hpp"
#include "plslab/engine/transition_graph.hpp"
#include "plslab/problems/instance.hpp"

#include <cstdint>
#include <vector>

namespace plslab {

/// All local optima (sinks of T(x)), ordered by encoding.
///
/// Walks every labelling in reflected Gray-code order and maintains flip gains
/// incrementally, so each step costs one neighbourhood update. Independent of the
/// engine's delta code. Throws CapExceededError above `cap` feasible solutions.
std::vector<Partition> enumerate_local_optima(const Instance& instance, std::uint64_t cap = kDefaultCap);

} // namespace plslab
