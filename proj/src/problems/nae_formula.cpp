#include "plslab/problems/nae_formula.hpp"

#include "plslab/core/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace plslab {

NaeFormula::NaeFormula(int num_vars) : num_vars_(num_vars)
{
    if (num_vars < 0) {
        throw DimensionError("negative variable count");
    }
}

void NaeFormula::add_clause(std::vector<int> lits, const Int& w)
{
    if (lits.size() < 2 || lits.size() > 3) {
        throw ValidationError("NAE clause must have 2 or 3 literals, got " + std::to_string(lits.size()));
    }
    for (int x : lits) {
        if (x < 0 || x >= num_vars_) {
            throw DimensionError("literal " + std::to_string(x) + " out of range");
        }
    }
    auto sorted = lits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("NAE clause repeats a variable");
    }
    clauses_.push_back(NaeClause{std::move(lits), w});
}

int NaeFormula::max_clause_size() const
{
    std::size_t m = 0;
    for (const auto& c : clauses_) {
        m = std::max(m, c.lits.size());
    }
    return static_cast<int>(m);
}

Int NaeFormula::min_weight() const
{
    Int m = 0;
    bool first = true;
    for (const auto& c : clauses_) {
        if (first || c.w < m) {
            m = c.w;
            first = false;
        }
    }
    return m;
}

std::vector<NaeClause> NaeFormula::merged_pairs() const
{
    std::vector<NaeClause> out;
    std::map<std::pair<int, int>, std::size_t> index;
    for (const auto& c : clauses_) {
        if (c.lits.size() != 2) {
            throw ValidationError("merged_pairs needs a formula of pair clauses");
        }
        const int a = std::min(c.lits[0], c.lits[1]);
        const int b = std::max(c.lits[0], c.lits[1]);
        auto [it, fresh] = index.try_emplace({a, b}, out.size());
        if (fresh) {
            out.push_back(NaeClause{{a, b}, c.w});
        } else {
            out[it->second].w += c.w;
        }
    }
    return out;
}

bool nae_satisfied(const NaeClause& c, const Partition& assignment)
{
    std::size_t t = 0;
    for (int x : c.lits) {
        t += assignment.side(x) ? 1 : 0;
    }
    return t > 0 && t < c.lits.size();
}

} // namespace plslab
