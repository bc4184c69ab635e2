#include "plslab/core/partition.hpp"

#include "plslab/core/error.hpp"

#include <string>

namespace plslab {

Partition::Partition(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k)
{
    if (k_ < 1) {
        throw DimensionError("partition needs at least one part");
    }
    for (int l : labels_) {
        if (l < 0 || l >= k_) {
            throw DimensionError("label " + std::to_string(l) + " outside 0.." + std::to_string(k_ - 1));
        }
    }
}

Partition Partition::bipartition(const std::vector<bool>& side)
{
    std::vector<int> labels(side.size());
    for (std::size_t i = 0; i < side.size(); ++i) {
        labels[i] = side[i] ? 1 : 0;
    }
    return Partition(std::move(labels), 2);
}

Partition Partition::decode(std::uint64_t code, int n, int k)
{
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(k));
        code /= static_cast<std::uint64_t>(k);
    }
    return Partition(std::move(labels), k);
}

int Partition::label(int element) const
{
    if (element < 0 || element >= size()) {
        throw DimensionError("element " + std::to_string(element) + " out of range for size " +
                             std::to_string(size()));
    }
    return labels_[static_cast<std::size_t>(element)];
}

int Partition::count(int label) const
{
    int c = 0;
    for (int l : labels_) {
        c += (l == label) ? 1 : 0;
    }
    return c;
}

std::vector<int> Partition::counts() const
{
    std::vector<int> c(static_cast<std::size_t>(k_), 0);
    for (int l : labels_) {
        ++c[static_cast<std::size_t>(l)];
    }
    return c;
}

Partition Partition::moved(int element, int target) const
{
    label(element);
    if (target < 0 || target >= k_) {
        throw DimensionError("target part " + std::to_string(target) + " out of range");
    }
    Partition out = *this;
    out.labels_[static_cast<std::size_t>(element)] = target;
    return out;
}

std::uint64_t Partition::encode() const
{
    std::uint64_t code = 0;
    for (auto it = labels_.rbegin(); it != labels_.rend(); ++it) {
        code = code * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(*it);
    }
    return code;
}

Partition flip(const Partition& p, int v)
{
    if (p.k() != 2) {
        throw DimensionError("flip is defined on bipartitions");
    }
    return p.moved(v, 1 - p.label(v));
}

Int cut_edge_weight(const WeightedGraph& g, const Partition& p)
{
    if (p.size() != g.n()) {
        throw DimensionError("partition of size " + std::to_string(p.size()) + " for graph on " +
                             std::to_string(g.n()) + " vertices");
    }
    Int s = 0;
    for (const Edge& e : g.edges()) {
        if (p.labels()[static_cast<std::size_t>(e.u)] != p.labels()[static_cast<std::size_t>(e.v)]) {
            s += e.w;
        }
    }
    return s;
}

} // namespace plslab
