#include "plslab/problems/instance.hpp"

namespace plslab {

int Instance::size() const
{
    return is_nae(kind.tag) ? formula.num_vars() : graph.n();
}

Instance Instance::of_graph(ProblemKind kind, WeightedGraph g)
{
    Instance inst;
    inst.kind = kind;
    inst.graph = std::move(g);
    return inst;
}

Instance Instance::of_formula(ProblemKind kind, NaeFormula f)
{
    Instance inst;
    inst.kind = kind;
    inst.formula = std::move(f);
    return inst;
}

} // namespace plslab
