#pragma once

// Incremental solution states driven by the exhaustive scanner and the sampled r6 search.
// T is std::int64_t (with __int128 products) when magnitudes allow it, Int otherwise.

#include "plslab/core/int.hpp"
#include "plslab/problems/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace plslab::detail {

template <typename T>
using Wide = std::conditional_t<std::is_same_v<T, std::int64_t>, __int128, Int>;

template <typename T>
T narrow(const Int& v)
{
    if constexpr (std::is_same_v<T, std::int64_t>) {
        return static_cast<std::int64_t>(v);
    } else {
        return v;
    }
}

template <typename T>
int sign_of(const T& v)
{
    if constexpr (std::is_same_v<T, Int>) {
        return v.sign();
    } else {
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
}

enum class SideRule { Any, OddBalanced, BothNonempty };

/// Bipartition state for cut objectives, plain or density (w(X,Y)/(|X||Y|)).
template <typename T>
class CutState {
public:
    CutState(int n, const std::vector<std::tuple<int, int, Int>>& edges, bool maximize, SideRule rule,
             bool density)
        : n_(n), adj_(static_cast<std::size_t>(n)), gain_(static_cast<std::size_t>(n), T(0)),
          side_(static_cast<std::size_t>(n), 0), maximize_(maximize), rule_(rule), density_(density)
    {
        for (const auto& [u, v, w] : edges) {
            const T tw = narrow<T>(w);
            adj_[static_cast<std::size_t>(u)].emplace_back(v, tw);
            adj_[static_cast<std::size_t>(v)].emplace_back(u, tw);
            gain_[static_cast<std::size_t>(u)] += tw;
            gain_[static_cast<std::size_t>(v)] += tw;
        }
        count_[0] = n;
        for (int v = 0; v < n; ++v) {
            if (improving_gain(gain_[static_cast<std::size_t>(v)])) {
                ++imp_[0];
            }
        }
    }

    int size() const { return n_; }
    int label(int v) const { return side_[static_cast<std::size_t>(v)]; }

    void move(int v, int /*target*/)
    {
        const auto vi = static_cast<std::size_t>(v);
        const int s = side_[vi];
        for (const auto& [u, w] : adj_[vi]) {
            const auto ui = static_cast<std::size_t>(u);
            untrack(ui);
            if (side_[ui] == s) {
                gain_[ui] -= 2 * w;
                cut_ += w;
            } else {
                gain_[ui] += 2 * w;
                cut_ -= w;
            }
            track(ui);
        }
        untrack(vi);
        gain_[vi] = -gain_[vi];
        side_[vi] = 1 - s;
        --count_[s];
        ++count_[1 - s];
        track(vi);
    }

    bool feasible() const
    {
        switch (rule_) {
        case SideRule::OddBalanced:
            return count_[0] - count_[1] == 1 || count_[1] - count_[0] == 1;
        case SideRule::BothNonempty:
            return count_[0] >= 1 && count_[1] >= 1;
        default:
            return true;
        }
    }

    bool side_may_move(int s) const
    {
        switch (rule_) {
        case SideRule::OddBalanced:
            return count_[s] > count_[1 - s];
        case SideRule::BothNonempty:
            return count_[s] >= 2;
        default:
            return true;
        }
    }

    /// Lowest vertex with a strictly improving feasible flip.
    std::optional<int> improving_vertex() const
    {
        if (!density_) {
            if (!((side_may_move(0) && imp_[0] > 0) || (side_may_move(1) && imp_[1] > 0))) {
                return std::nullopt;
            }
            for (int v = 0; v < n_; ++v) {
                const auto vi = static_cast<std::size_t>(v);
                if (side_may_move(side_[vi]) && improving_gain(gain_[vi])) {
                    return v;
                }
            }
            return std::nullopt;
        }
        for (int v = 0; v < n_; ++v) {
            if (density_improves(v)) {
                return v;
            }
        }
        return std::nullopt;
    }

    bool is_sink() const
    {
        if (!density_) {
            return !((side_may_move(0) && imp_[0] > 0) || (side_may_move(1) && imp_[1] > 0));
        }
        return !improving_vertex().has_value();
    }

private:
    bool improving_gain(const T& g) const { return maximize_ ? g > 0 : g < 0; }

    bool density_improves(int v) const
    {
        const auto vi = static_cast<std::size_t>(v);
        const int s = side_[vi];
        if (!side_may_move(s)) {
            return false;
        }
        const Wide<T> a = count_[s];
        const Wide<T> b = count_[1 - s];
        const Wide<T> lhs = Wide<T>(gain_[vi]) * a * b;
        const Wide<T> rhs = Wide<T>(cut_) * (a - b - 1);
        return maximize_ ? lhs > rhs : lhs < rhs;
    }

    void untrack(std::size_t v)
    {
        if (!density_ && improving_gain(gain_[v])) {
            --imp_[side_[v]];
        }
    }
    void track(std::size_t v)
    {
        if (!density_ && improving_gain(gain_[v])) {
            ++imp_[side_[v]];
        }
    }

    int n_;
    std::vector<std::vector<std::pair<int, T>>> adj_;
    std::vector<T> gain_;
    std::vector<int> side_;
    int count_[2] = {0, 0};
    int imp_[2] = {0, 0};
    T cut_ = 0;
    bool maximize_;
    SideRule rule_;
    bool density_;
};

/// Truth-assignment state for weighted NAE clauses of size 2 and 3.
template <typename T>
class NaeState {
public:
    NaeState(int n, const std::vector<std::pair<std::vector<int>, Int>>& clauses, SideRule rule)
        : n_(n), occ_(static_cast<std::size_t>(n)), gain_(static_cast<std::size_t>(n), T(0)),
          val_(static_cast<std::size_t>(n), 0), stamp_(static_cast<std::size_t>(n), 0), rule_(rule)
    {
        for (const auto& [lits, w] : clauses) {
            const std::size_t c = lits_.size();
            lits_.push_back(lits);
            w_.push_back(narrow<T>(w));
            true_.push_back(0);
            for (int x : lits) {
                occ_[static_cast<std::size_t>(x)].push_back(c);
                gain_[static_cast<std::size_t>(x)] += w_.back();
            }
        }
        count_[0] = n;
        for (int v = 0; v < n; ++v) {
            if (gain_[static_cast<std::size_t>(v)] > 0) {
                ++imp_[0];
            }
        }
    }

    int size() const { return n_; }
    int label(int v) const { return val_[static_cast<std::size_t>(v)]; }

    void move(int x, int /*target*/)
    {
        const auto xi = static_cast<std::size_t>(x);
        ++epoch_;
        touched_.clear();
        touch(xi);
        for (std::size_t c : occ_[xi]) {
            for (int y : lits_[c]) {
                touch(static_cast<std::size_t>(y));
            }
        }
        for (std::size_t c : occ_[xi]) {
            for (int y : lits_[c]) {
                gain_[static_cast<std::size_t>(y)] -= contrib(c, static_cast<std::size_t>(y));
            }
        }
        const int s = val_[xi];
        val_[xi] = 1 - s;
        --count_[s];
        ++count_[1 - s];
        for (std::size_t c : occ_[xi]) {
            true_[c] += s == 0 ? 1 : -1;
            for (int y : lits_[c]) {
                gain_[static_cast<std::size_t>(y)] += contrib(c, static_cast<std::size_t>(y));
            }
        }
        for (std::size_t y : touched_) {
            if (gain_[y] > 0) {
                ++imp_[val_[y]];
            }
        }
    }

    bool feasible() const
    {
        if (rule_ == SideRule::OddBalanced) {
            return count_[0] - count_[1] == 1 || count_[1] - count_[0] == 1;
        }
        return true;
    }

    bool side_may_move(int s) const
    {
        return rule_ != SideRule::OddBalanced || count_[s] > count_[1 - s];
    }

    bool is_sink() const
    {
        return !((side_may_move(0) && imp_[0] > 0) || (side_may_move(1) && imp_[1] > 0));
    }

private:
    bool sat(std::size_t c, int t) const { return t > 0 && t < static_cast<int>(lits_[c].size()); }

    // Cost change of clause c if y flipped now.
    T contrib(std::size_t c, std::size_t y) const
    {
        const int t = true_[c];
        const int t2 = val_[y] == 1 ? t - 1 : t + 1;
        const bool before = sat(c, t);
        const bool after = sat(c, t2);
        if (before == after) {
            return T(0);
        }
        return after ? w_[c] : T(-w_[c]);
    }

    void touch(std::size_t y)
    {
        if (stamp_[y] == epoch_) {
            return;
        }
        stamp_[y] = epoch_;
        touched_.push_back(y);
        if (gain_[y] > 0) {
            --imp_[val_[y]];
        }
    }

    int n_;
    std::vector<std::vector<std::size_t>> occ_;
    std::vector<std::vector<int>> lits_;
    std::vector<T> w_;
    std::vector<int> true_;
    std::vector<T> gain_;
    std::vector<int> val_;
    std::vector<std::uint64_t> stamp_;
    std::vector<std::size_t> touched_;
    std::uint64_t epoch_ = 0;
    int count_[2] = {0, 0};
    int imp_[2] = {0, 0};
    SideRule rule_;
};

/// k-Means clustering state over graph weights (sum of pairwise weights / cluster size).
template <typename T>
class KMeansState {
public:
    KMeansState(int n, int k, const std::vector<std::tuple<int, int, Int>>& edges)
        : n_(n), k_(k), adj_(static_cast<std::size_t>(n)), label_(static_cast<std::size_t>(n), 0),
          size_(static_cast<std::size_t>(k), 0), sum_(static_cast<std::size_t>(k), T(0)),
          link_(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), T(0))
    {
        for (const auto& [u, v, w] : edges) {
            const T tw = narrow<T>(w);
            adj_[static_cast<std::size_t>(u)].emplace_back(v, tw);
            adj_[static_cast<std::size_t>(v)].emplace_back(u, tw);
            link(u, 0) += tw;
            link(v, 0) += tw;
            sum_[0] += tw;
        }
        size_[0] = n;
    }

    int size() const { return n_; }
    int label(int v) const { return label_[static_cast<std::size_t>(v)]; }

    void move(int v, int b)
    {
        const int a = label_[static_cast<std::size_t>(v)];
        sum_[static_cast<std::size_t>(a)] -= link(v, a);
        sum_[static_cast<std::size_t>(b)] += link(v, b);
        for (const auto& [u, w] : adj_[static_cast<std::size_t>(v)]) {
            link(u, a) -= w;
            link(u, b) += w;
        }
        --size_[static_cast<std::size_t>(a)];
        ++size_[static_cast<std::size_t>(b)];
        label_[static_cast<std::size_t>(v)] = b;
    }

    bool feasible() const { return true; }

    bool is_sink() const
    {
        for (int v = 0; v < n_; ++v) {
            const int a = label_[static_cast<std::size_t>(v)];
            for (int b = 0; b < k_; ++b) {
                if (b != a && delta_sign(v, a, b) < 0) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    T& link(int v, int j) { return link_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j)]; }
    const T& link(int v, int j) const
    {
        return link_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j)];
    }

    // sign of (S_a − t_va)/(n_a − 1) + (S_b + t_vb)/(n_b + 1) − S_a/n_a − S_b/n_b, empty terms dropped
    int delta_sign(int v, int a, int b) const
    {
        using W = Wide<T>;
        const W na = size_[static_cast<std::size_t>(a)];
        const W nb = size_[static_cast<std::size_t>(b)];
        const W sa = sum_[static_cast<std::size_t>(a)];
        const W sb = sum_[static_cast<std::size_t>(b)];
        const W p1 = sa - W(link(v, a));
        const W q1 = na > 1 ? W(na - 1) : W(1);
        const W p2 = sb + W(link(v, b));
        const W q2 = nb + 1;
        const W p3 = sa;
        const W q3 = na;
        const W p4 = nb > 0 ? sb : W(0);
        const W q4 = nb > 0 ? nb : W(1);
        const W num = (na > 1 ? W(p1 * q2 * q3 * q4) : W(0)) + W(p2 * q1 * q3 * q4) - W(p3 * q1 * q2 * q4) -
                      W(p4 * q1 * q2 * q3);
        return sign_of(num);
    }

    int n_;
    int k_;
    std::vector<std::vector<std::pair<int, T>>> adj_;
    std::vector<int> label_;
    std::vector<int> size_;
    std::vector<T> sum_;
    std::vector<T> link_;
};

} // namespace plslab::detail
