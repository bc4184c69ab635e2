#include "plslab/problems/problem.hpp"

#include "plslab/core/error.hpp"

#include <cstdlib>
#include <string>

namespace plslab {

namespace {

Int binomial(int n, int r)
{
    Int c = 1;
    for (int i = 0; i < r; ++i) {
        c = c * (n - i) / (i + 1);
    }
    return c;
}

} // namespace

Problem::Problem(Instance instance) : instance_(std::move(instance))
{
    if (instance_.kind.tag == ProblemTag::KMeans && instance_.kind.k < 2) {
        throw ValidationError("k-Means needs k >= 2");
    }
    const auto n = static_cast<std::size_t>(instance_.size());
    if (is_nae(instance_.kind.tag)) {
        occurrences_.assign(n, {});
        const auto& cl = instance_.formula.clauses();
        for (std::size_t i = 0; i < cl.size(); ++i) {
            for (int x : cl[i].lits) {
                occurrences_[static_cast<std::size_t>(x)].push_back(i);
            }
        }
    } else {
        adj_.assign(n, {});
        for (const Edge& e : instance_.graph.edges()) {
            adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
            adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
        }
    }
}

void Problem::check_shape(const Partition& s) const
{
    if (s.size() != size()) {
        throw DimensionError("solution has " + std::to_string(s.size()) + " entries, instance has " +
                             std::to_string(size()));
    }
    if (s.k() != parts()) {
        throw DimensionError("solution uses " + std::to_string(s.k()) + " parts, problem needs " +
                             std::to_string(parts()));
    }
}

bool counts_feasible(ProblemTag tag, const std::vector<int>& counts)
{
    if (is_odd_balanced(tag)) {
        return std::abs(counts[0] - counts[1]) == 1;
    }
    if (is_density_kind(tag)) {
        return counts[0] >= 1 && counts[1] >= 1;
    }
    return true;
}

bool Problem::counts_feasible(const std::vector<int>& counts) const
{
    return plslab::counts_feasible(instance_.kind.tag, counts);
}

bool Problem::is_feasible(const Partition& s) const
{
    check_shape(s);
    return counts_feasible(s.counts());
}

bool Problem::can_move(const Partition& s, int element, int target) const
{
    check_shape(s);
    if (target < 0 || target >= parts()) {
        return false;
    }
    const int from = s.label(element);
    if (from == target) {
        return false;
    }
    auto counts = s.counts();
    if (!counts_feasible(counts)) {
        return false;
    }
    --counts[static_cast<std::size_t>(from)];
    ++counts[static_cast<std::size_t>(target)];
    return counts_feasible(counts);
}

Int Problem::cut_gain(const Partition& s, int v) const
{
    Int g = 0;
    const int lv = s.labels()[static_cast<std::size_t>(v)];
    for (const auto& [u, w] : adj_[static_cast<std::size_t>(v)]) {
        if (s.labels()[static_cast<std::size_t>(u)] == lv) {
            g += w;
        } else {
            g -= w;
        }
    }
    return g;
}

Int Problem::cluster_sum(const Partition& s, int label) const
{
    Int sum = 0;
    for (const Edge& e : instance_.graph.edges()) {
        if (s.labels()[static_cast<std::size_t>(e.u)] == label &&
            s.labels()[static_cast<std::size_t>(e.v)] == label) {
            sum += e.w;
        }
    }
    return sum;
}

Int Problem::link_weight(const Partition& s, int v, int label) const
{
    Int sum = 0;
    for (const auto& [u, w] : adj_[static_cast<std::size_t>(v)]) {
        if (s.labels()[static_cast<std::size_t>(u)] == label) {
            sum += w;
        }
    }
    return sum;
}

Rat Problem::cost(const Partition& s) const
{
    check_shape(s);
    const ProblemTag tag = instance_.kind.tag;
    if (is_nae(tag)) {
        Int sum = 0;
        for (const auto& c : instance_.formula.clauses()) {
            if (nae_satisfied(c, s)) {
                sum += c.w;
            }
        }
        return Rat(sum);
    }
    if (tag == ProblemTag::KMeans) {
        std::vector<Int> sums(static_cast<std::size_t>(parts()), Int(0));
        for (const Edge& e : instance_.graph.edges()) {
            const int a = s.labels()[static_cast<std::size_t>(e.u)];
            if (a == s.labels()[static_cast<std::size_t>(e.v)]) {
                sums[static_cast<std::size_t>(a)] += e.w;
            }
        }
        const auto counts = s.counts();
        Rat total;
        for (std::size_t i = 0; i < sums.size(); ++i) {
            if (counts[i] > 0) {
                total += Rat(sums[i], Int(counts[i]));
            }
        }
        return total;
    }
    const Int w = cut_edge_weight(instance_.graph, s);
    if (is_density_kind(tag)) {
        const int x = s.count(1);
        const int y = s.size() - x;
        if (x == 0 || y == 0) {
            throw UndefinedObjectiveError("density of a cut with an empty side");
        }
        return Rat(w, Int(x) * y);
    }
    return Rat(w);
}

Rat Problem::flip_delta(const Partition& s, int element, int target) const
{
    check_shape(s);
    s.label(element);
    if (!can_move(s, element, target)) {
        throw InfeasibleMoveError("moving element " + std::to_string(element) + " to part " +
                                  std::to_string(target) + " leaves the feasible set");
    }
    const ProblemTag tag = instance_.kind.tag;
    const int from = s.label(element);
    if (is_nae(tag)) {
        Int d = 0;
        for (std::size_t ci : occurrences_[static_cast<std::size_t>(element)]) {
            const NaeClause& c = instance_.formula.clauses()[ci];
            std::size_t t = 0;
            for (int x : c.lits) {
                t += s.side(x) ? 1 : 0;
            }
            const std::size_t t2 = from == 1 ? t - 1 : t + 1;
            const bool before = t > 0 && t < c.lits.size();
            const bool after = t2 > 0 && t2 < c.lits.size();
            if (before != after) {
                d += after ? c.w : Int(-c.w);
            }
        }
        return Rat(d);
    }
    if (tag == ProblemTag::KMeans) {
        const auto counts = s.counts();
        const Int na = counts[static_cast<std::size_t>(from)];
        const Int nb = counts[static_cast<std::size_t>(target)];
        const Int sa = cluster_sum(s, from);
        const Int sb = cluster_sum(s, target);
        const Int ta = link_weight(s, element, from);
        const Int tb = link_weight(s, element, target);
        Rat d;
        if (na > 1) {
            d += Rat(sa - ta, na - 1);
        }
        d += Rat(sb + tb, nb + 1);
        d -= Rat(sa, na);
        if (nb > 0) {
            d -= Rat(sb, nb);
        }
        return d;
    }
    const Int g = cut_gain(s, element);
    if (is_density_kind(tag)) {
        const Int w = cut_edge_weight(instance_.graph, s);
        const int a = s.count(from);
        const int b = s.size() - a;
        return Rat(w + g, Int(a - 1) * (b + 1)) - Rat(w, Int(a) * b);
    }
    return Rat(g);
}

bool Problem::improves(const Rat& delta) const
{
    return orientation() == Orientation::Maximize ? delta.sign() > 0 : delta.sign() < 0;
}

bool Problem::better(const Rat& a, const Rat& b) const
{
    return orientation() == Orientation::Maximize ? a > b : a < b;
}

std::vector<std::pair<int, int>> Problem::moves(const Partition& s) const
{
    check_shape(s);
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < s.size(); ++e) {
        for (int t = 0; t < parts(); ++t) {
            if (can_move(s, e, t)) {
                out.emplace_back(e, t);
            }
        }
    }
    return out;
}

std::vector<Partition> Problem::neighbors(const Partition& s) const
{
    std::vector<Partition> out;
    for (const auto& [e, t] : moves(s)) {
        out.push_back(s.moved(e, t));
    }
    return out;
}

Int Problem::feasible_count() const
{
    const int n = size();
    const ProblemTag tag = instance_.kind.tag;
    if (tag == ProblemTag::KMeans) {
        return ipow(Int(instance_.kind.k), static_cast<unsigned>(n));
    }
    if (is_odd_balanced(tag)) {
        return n % 2 == 1 ? Int(2 * binomial(n, (n - 1) / 2)) : Int(0);
    }
    const Int all = ipow(Int(2), static_cast<unsigned>(n));
    if (is_density_kind(tag)) {
        return n >= 2 ? Int(all - 2) : Int(0);
    }
    return all;
}

bool is_feasible(const Instance& instance, const Partition& s)
{
    return Problem(instance).is_feasible(s);
}

Rat cost(const Instance& instance, const Partition& s)
{
    return Problem(instance).cost(s);
}

Rat flip_delta(const Instance& instance, const Partition& s, int element, int target)
{
    return Problem(instance).flip_delta(s, element, target);
}

std::vector<Partition> neighbors(const Instance& instance, const Partition& s)
{
    return Problem(instance).neighbors(s);
}

namespace {

void check_witness(const Instance& inst, std::vector<std::string>& out)
{
    const PointMatrix& m = *inst.witness;
    if (static_cast<int>(m.points()) != inst.graph.n()) {
        out.push_back("witness has " + std::to_string(m.points()) + " rows for " +
                      std::to_string(inst.graph.n()) + " vertices");
        return;
    }
    if (auto v = m.alignment_violation()) {
        out.push_back("witness is not column-aligned: " + *v);
        return;
    }
    const bool squared = inst.kind.tag != ProblemTag::EuclideanMaxCut;
    for (int u = 0; u < inst.graph.n(); ++u) {
        for (int v = u + 1; v < inst.graph.n(); ++v) {
            const Rat d2 = m.squared_distance(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
            const Int w = inst.graph.weight(u, v);
            const Rat expect = squared ? Rat(w) : Rat(Int(w * w));
            if (d2 != expect || (!squared && w.sign() < 0)) {
                out.push_back("witness distance for pair (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is " + d2.to_string() + (squared ? "" : " squared") + ", weight says " +
                              to_string(w));
                return;
            }
        }
    }
}

// A flip of v changes the cut by Σ_{u∈Q} w(vu) − Σ_{u∉Q} w(vu), and every Q ⊆ N(v) occurs in some cut.
bool has_zero_flip(const WeightedGraph& g, int v)
{
    const auto inc = g.incident(v);
    const std::size_t d = inc.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Int s = 0;
        for (std::size_t i = 0; i < d; ++i) {
            s += ((mask >> i) & 1U) ? inc[i].second : Int(-inc[i].second);
        }
        if (s.is_zero()) {
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<std::string> validate_instance(const Instance& inst)
{
    std::vector<std::string> out;
    const ProblemTag tag = inst.kind.tag;
    const int n = inst.size();
    if (is_nae(tag)) {
        if (inst.graph.n() != 0 || inst.graph.edge_count() != 0) {
            out.push_back("NAE instance carries a graph");
        }
        for (std::size_t i = 0; i < inst.formula.clauses().size(); ++i) {
            const auto& c = inst.formula.clauses()[i];
            if (tag == ProblemTag::OddHalfPosNae2Sat && c.lits.size() != 2) {
                out.push_back("clause " + std::to_string(i) + " has size " + std::to_string(c.lits.size()) +
                              ", pair clauses only");
            }
        }
    } else {
        if (!inst.formula.clauses().empty()) {
            out.push_back("graph instance carries clauses");
        }
        for (const Edge& e : inst.graph.edges()) {
            if (e.w.sign() < 0) {
                out.push_back("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has negative weight " +
                              to_string(e.w));
                break;
            }
        }
    }
    if (is_odd_balanced(tag) && n % 2 == 0) {
        out.push_back("vertex count must be odd (n=" + std::to_string(n) + ")");
    }
    if (is_density_kind(tag) && n < 2) {
        out.push_back("density objective needs at least 2 vertices");
    }
    if (tag == ProblemTag::KMeans && inst.kind.k < 2) {
        out.push_back("k-Means needs k >= 2");
    }
    if (is_degree5(tag)) {
        for (int v = 0; v < n; ++v) {
            const int d = inst.graph.support_degree(v);
            if (d > 5) {
                out.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(d) + " > 5");
            }
        }
    }
    if (tag == ProblemTag::DistinctMaxCutDeg5 && out.empty()) {
        for (int v = 0; v < n; ++v) {
            if (has_zero_flip(inst.graph, v)) {
                out.push_back("flipping vertex " + std::to_string(v) + " can leave the cut weight unchanged");
                break;
            }
        }
    }
    if (inst.witness && !is_nae(tag)) {
        check_witness(inst, out);
    } else if (inst.witness) {
        out.push_back("NAE instance carries a witness");
    }
    return out;
}

Rat kmeans_point_cost(const PointMatrix& points, const Partition& clustering)
{
    if (static_cast<int>(points.points()) != clustering.size()) {
        throw DimensionError("clustering size does not match the point count");
    }
    points.check_aligned();
    const auto counts = clustering.counts();
    Rat total;
    for (std::size_t c = 0; c < points.columns(); ++c) {
        const auto rad = points.column_radicand(c);
        if (!rad) {
            continue;
        }
        // coordinate = s·√r, so the cluster mean is (Σs/|C|)·√r and deviations scale by r
        std::vector<Int> sign_sum(counts.size(), Int(0));
        for (std::size_t i = 0; i < points.points(); ++i) {
            sign_sum[static_cast<std::size_t>(clustering.labels()[i])] += points.at(i, c).sign;
        }
        for (std::size_t i = 0; i < points.points(); ++i) {
            const auto j = static_cast<std::size_t>(clustering.labels()[i]);
            const Rat dev = Rat(points.at(i, c).sign) - Rat(sign_sum[j], Int(counts[j]));
            total += dev * dev * *rad;
        }
    }
    return total;
}

} // namespace plslab
