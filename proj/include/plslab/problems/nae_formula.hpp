#pragma once

#include "plslab/core/int.hpp"
#include "plslab/core/partition.hpp"

#include <vector>

namespace plslab {

/// NAE(x_1, ..., x_l) over positive literals with an integer (possibly negative) weight.
struct NaeClause {
    std::vector<int> lits;
    Int w;

    friend bool operator==(const NaeClause& a, const NaeClause& b) = default;
};

/// Weighted positive NAE formula with clauses of size 2 or 3.
///
/// Duplicate clauses stay as separate records; merged_pairs() folds pair clauses together.
class NaeFormula {
public:
    NaeFormula() = default;
    explicit NaeFormula(int num_vars);

    int num_vars() const { return num_vars_; }
    const std::vector<NaeClause>& clauses() const { return clauses_; }
    void add_clause(std::vector<int> lits, const Int& w);

    int max_clause_size() const;
    Int min_weight() const;

    /// Sum of weights per unordered pair over all size-2 clauses, in first-occurrence order.
    /// Throws ValidationError if a 3-clause is present.
    std::vector<NaeClause> merged_pairs() const;

    friend bool operator==(const NaeFormula& a, const NaeFormula& b) = default;

private:
    int num_vars_ = 0;
    std::vector<NaeClause> clauses_;
};

/// A clause is satisfied when its literals are neither all true nor all false.
bool nae_satisfied(const NaeClause& c, const Partition& assignment);

} // namespace plslab
