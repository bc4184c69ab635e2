#include "plslab/core/graph.hpp"

#include "plslab/core/error.hpp"

#include <algorithm>
#include <string>

namespace plslab {

WeightedGraph::WeightedGraph(int n) : n_(n)
{
    if (n < 0) {
        throw DimensionError("negative vertex count");
    }
}

void WeightedGraph::check_pair(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw DimensionError("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n_));
    }
    if (u == v) {
        throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
}

void WeightedGraph::rebuild_index()
{
    index_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        index_[{edges_[i].u, edges_[i].v}] = i;
    }
}

void WeightedGraph::set_weight(int u, int v, const Int& w, bool explicit_zero)
{
    check_pair(u, v);
    if (u > v) {
        std::swap(u, v);
    }
    const bool keep_zero = explicit_zero && w.is_zero();
    auto it = index_.find({u, v});
    if (it == index_.end()) {
        if (w.is_zero() && !keep_zero) {
            return;
        }
        index_[{u, v}] = edges_.size();
        edges_.push_back(Edge{u, v, w, keep_zero});
        return;
    }
    if (w.is_zero() && !keep_zero) {
        edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(it->second));
        rebuild_index();
        return;
    }
    edges_[it->second].w = w;
    edges_[it->second].explicit_zero = keep_zero;
}

void WeightedGraph::add_to_weight(int u, int v, const Int& delta)
{
    set_weight(u, v, weight(u, v) + delta);
}

Int WeightedGraph::weight(int u, int v) const
{
    check_pair(u, v);
    auto it = index_.find({std::min(u, v), std::max(u, v)});
    return it == index_.end() ? Int(0) : edges_[it->second].w;
}

bool WeightedGraph::has_edge(int u, int v) const
{
    check_pair(u, v);
    return index_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<std::pair<int, Int>> WeightedGraph::incident(int v) const
{
    if (v < 0 || v >= n_) {
        throw DimensionError("vertex " + std::to_string(v) + " out of range");
    }
    std::vector<std::pair<int, Int>> out;
    for (const Edge& e : edges_) {
        if (e.u == v) {
            out.emplace_back(e.v, e.w);
        } else if (e.v == v) {
            out.emplace_back(e.u, e.w);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

int WeightedGraph::degree(int v) const
{
    if (v < 0 || v >= n_) {
        throw DimensionError("vertex " + std::to_string(v) + " out of range");
    }
    int d = 0;
    for (const Edge& e : edges_) {
        d += (e.u == v || e.v == v) ? 1 : 0;
    }
    return d;
}

int WeightedGraph::support_degree(int v) const
{
    if (v < 0 || v >= n_) {
        throw DimensionError("vertex " + std::to_string(v) + " out of range");
    }
    int d = 0;
    for (const Edge& e : edges_) {
        d += (e.u == v || e.v == v) && !e.w.is_zero() ? 1 : 0;
    }
    return d;
}

int WeightedGraph::max_support_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        best = std::max(best, support_degree(v));
    }
    return best;
}

int WeightedGraph::max_degree() const
{
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Int WeightedGraph::weighted_degree(int v) const
{
    Int s = 0;
    for (const auto& [u, w] : incident(v)) {
        s += w;
    }
    return s;
}

Int WeightedGraph::total_weight() const
{
    Int s = 0;
    for (const Edge& e : edges_) {
        s += e.w;
    }
    return s;
}

Int WeightedGraph::max_weight() const
{
    Int m = 0;
    bool first = true;
    for (const Edge& e : edges_) {
        if (first || e.w > m) {
            m = e.w;
            first = false;
        }
    }
    return m;
}

Int WeightedGraph::min_weight() const
{
    Int m = 0;
    bool first = true;
    for (const Edge& e : edges_) {
        if (first || e.w < m) {
            m = e.w;
            first = false;
        }
    }
    return m;
}

Int WeightedGraph::max_abs_weight() const
{
    Int m = 0;
    for (const Edge& e : edges_) {
        Int a = abs(e.w);
        if (a > m) {
            m = a;
        }
    }
    return m;
}

bool WeightedGraph::is_nonnegative() const
{
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w.sign() >= 0; });
}

bool WeightedGraph::is_complete() const
{
    const auto n = static_cast<std::size_t>(n_);
    return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b)
{
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const Edge& x = a.edges_[i];
        const Edge& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.w != y.w || x.explicit_zero != y.explicit_zero) {
            return false;
        }
    }
    return true;
}

} // namespace plslab
