#include "plslab/cli/io.hpp"

#include "plslab/core/error.hpp"

#include <limits>
#include <set>
#include <sstream>

namespace plslab::cli {

namespace {

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) {
        throw ValidationError(std::string("missing field '") + key + "'");
    }
    return doc.at(key);
}

long long as_integer(const Json& v, const char* what)
{
    if (!v.is_number_integer()) {
        throw ValidationError(std::string(what) + " must be an integer");
    }
    return v.get<long long>();
}

int as_index(const Json& v, const char* what)
{
    const long long x = as_integer(v, what);
    if (x < 0 || x > std::numeric_limits<int>::max()) {
        throw ValidationError(std::string(what) + " out of range");
    }
    return static_cast<int>(x);
}

std::string as_string(const Json& v, const char* what)
{
    if (!v.is_string()) {
        throw ValidationError(std::string(what) + " must be a string");
    }
    return v.get<std::string>();
}

Int as_int(const Json& v, const char* what)
{
    return parse_int(as_string(v, what));
}

Rat as_rat(const Json& v, const char* what)
{
    return Rat::parse(as_string(v, what));
}

const Json& as_array(const Json& v, const char* what)
{
    if (!v.is_array()) {
        throw ValidationError(std::string(what) + " must be an array");
    }
    return v;
}

Json kind_fields(const ProblemKind& kind)
{
    Json j;
    j["problem"] = kind_name(kind.tag);
    if (kind.tag == ProblemTag::KMeans) {
        j["k"] = kind.k;
    }
    return j;
}

ProblemKind kind_from(const Json& doc)
{
    ProblemKind kind{parse_kind_tag(as_string(field(doc, "problem"), "problem"))};
    if (kind.tag == ProblemTag::KMeans) {
        kind.k = as_index(field(doc, "k"), "k");
    }
    return kind;
}

Json labels_json(const Partition& p)
{
    return Json(p.labels());
}

Json witness_to_json(const PointMatrix& m)
{
    Json rows = Json::array();
    for (const auto& row : m.rows()) {
        Json r = Json::array();
        for (const SqrtCoord& c : row) {
            r.push_back(Json{{"s", c.sign}, {"num", to_string(c.radicand.num())}, {"den", to_string(c.radicand.den())}});
        }
        rows.push_back(std::move(r));
    }
    return Json{{"rows", std::move(rows)}};
}

PointMatrix witness_from_json(const Json& doc)
{
    std::vector<std::vector<SqrtCoord>> rows;
    for (const Json& r : as_array(field(doc, "rows"), "witness rows")) {
        std::vector<SqrtCoord> row;
        for (const Json& c : as_array(r, "witness row")) {
            const long long s = as_integer(field(c, "s"), "witness sign");
            if (s < -1 || s > 1) {
                throw InvalidMatrixError("witness sign must be -1, 0 or 1");
            }
            const Int den = as_int(field(c, "den"), "witness den");
            if (den.is_zero()) {
                throw InvalidMatrixError("witness radicand with zero denominator");
            }
            row.emplace_back(static_cast<int>(s), Rat(as_int(field(c, "num"), "witness num"), den));
        }
        rows.push_back(std::move(row));
    }
    return PointMatrix(std::move(rows));
}

std::string role_name(VarRole r)
{
    switch (r) {
    case VarRole::Level1:
        return "level1";
    case VarRole::Level2:
        return "level2";
    case VarRole::Level3:
        return "level3";
    }
    return "level1";
}

VarRole parse_role(const std::string& s)
{
    if (s == "level1") {
        return VarRole::Level1;
    }
    if (s == "level2") {
        return VarRole::Level2;
    }
    if (s == "level3") {
        return VarRole::Level3;
    }
    throw ValidationError("unknown variable role '" + s + "'");
}

std::vector<int> int_list(const Json& v, const char* what)
{
    std::vector<int> out;
    for (const Json& x : as_array(v, what)) {
        const long long y = as_integer(x, what);
        out.push_back(static_cast<int>(y));
    }
    return out;
}

std::string rat_string(const Rat& r)
{
    return r.to_string();
}

} // namespace

Json instance_to_json(const Instance& instance)
{
    Json j = kind_fields(instance.kind);
    j["n"] = instance.size();
    if (is_nae(instance.kind.tag)) {
        Json clauses = Json::array();
        for (const NaeClause& c : instance.formula.clauses()) {
            clauses.push_back(Json{{"lits", c.lits}, {"w", to_string(c.w)}});
        }
        j["clauses"] = std::move(clauses);
    } else {
        Json edges = Json::array();
        Json zeros = Json::array();
        for (const Edge& e : instance.graph.edges()) {
            edges.push_back(Json{e.u, e.v, to_string(e.w)});
            if (e.explicit_zero) {
                zeros.push_back(Json{e.u, e.v});
            }
        }
        j["edges"] = std::move(edges);
        j["explicit_zero_edges"] = std::move(zeros);
    }
    if (instance.witness) {
        j["witness"] = witness_to_json(*instance.witness);
    }
    return j;
}

Instance instance_from_json(const Json& doc)
{
    const ProblemKind kind = kind_from(doc);
    const long long n = as_integer(field(doc, "n"), "n");
    if (n < 0 || n > 1'000'000) {
        throw ValidationError("n out of range");
    }
    const int size = static_cast<int>(n);
    if (is_nae(kind.tag)) {
        NaeFormula f(size);
        for (const Json& c : as_array(field(doc, "clauses"), "clauses")) {
            f.add_clause(int_list(field(c, "lits"), "clause literals"), as_int(field(c, "w"), "clause weight"));
        }
        Instance inst = Instance::of_formula(kind, std::move(f));
        if (doc.contains("witness")) {
            inst.witness = witness_from_json(doc.at("witness"));
        }
        return inst;
    }
    std::set<std::pair<int, int>> zeros;
    if (doc.contains("explicit_zero_edges")) {
        for (const Json& z : as_array(doc.at("explicit_zero_edges"), "explicit_zero_edges")) {
            const auto uv = int_list(z, "explicit zero edge");
            if (uv.size() != 2) {
                throw ValidationError("explicit zero edge must be [u, v]");
            }
            zeros.insert(std::minmax(uv[0], uv[1]));
        }
    }
    WeightedGraph g(size);
    for (const Json& e : as_array(field(doc, "edges"), "edges")) {
        if (!e.is_array() || e.size() != 3) {
            throw ValidationError("edge must be [u, v, \"w\"]");
        }
        const int u = as_index(e[0], "edge endpoint");
        const int v = as_index(e[1], "edge endpoint");
        const Int w = as_int(e[2], "edge weight");
        if (g.has_edge(u, v)) {
            throw ValidationError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        const bool zero = w.is_zero() && zeros.count(std::minmax(u, v)) > 0;
        g.set_weight(u, v, w, zero);
    }
    Instance inst = Instance::of_graph(kind, std::move(g));
    if (doc.contains("witness")) {
        inst.witness = witness_from_json(doc.at("witness"));
    }
    return inst;
}

Json solution_to_json(const ProblemKind& kind, const Partition& solution)
{
    Json j = kind_fields(kind);
    j["assignment"] = labels_json(solution);
    return j;
}

Partition solution_from_json(const Json& doc, const ProblemKind& kind, int n)
{
    const std::vector<int> labels = int_list(field(doc, "assignment"), "assignment");
    if (static_cast<int>(labels.size()) != n) {
        throw DimensionError("assignment has " + std::to_string(labels.size()) + " entries, instance has " +
                             std::to_string(n));
    }
    return Partition(labels, part_count(kind));
}

Json cert_to_json(const ReductionCert& cert)
{
    Json j;
    j["reduction"] = reduction_name(cert.id);
    j["from"] = kind_fields(cert.from);
    j["to"] = kind_fields(cert.to);
    j["source_n"] = cert.source_n;
    j["target_n"] = cert.target_n;
    Json constants = Json::array();
    for (const auto& [name, value] : cert.constants) {
        constants.push_back(Json{name, to_string(value)});
    }
    j["constants"] = std::move(constants);
    if (cert.gadget) {
        const NaeGadgetParams& p = *cert.gadget;
        Json roles = Json::array();
        for (const VarTag& t : p.var_roles) {
            roles.push_back(Json{role_name(t.role), t.index});
        }
        j["gadget"] = Json{{"n", p.n},
                           {"N", to_string(p.N)},
                           {"L", to_string(p.L)},
                           {"M", to_string(p.M)},
                           {"delta_min", to_string(p.delta_min)},
                           {"delta_max", to_string(p.delta_max)},
                           {"var_roles", std::move(roles)}};
    }
    if (cert.densest) {
        const DensestParams& p = *cert.densest;
        Json pairs = Json::array();
        for (const auto& [a, b] : p.matching_pairs) {
            pairs.push_back(Json{a, b});
        }
        j["densest"] = Json{{"aux_base", to_string(p.aux_base)},
                            {"scale", to_string(p.scale)},
                            {"matching_size", to_string(p.matching_size)},
                            {"matching_weight", to_string(p.matching_weight)},
                            {"matching_pairs", std::move(pairs)},
                            {"oracle_mode", p.oracle_mode}};
    }
    if (cert.embedding) {
        const EmbeddingParams& p = *cert.embedding;
        Json alphas = Json::array();
        for (const Rat& a : p.alpha_radicands) {
            alphas.push_back(rat_string(a));
        }
        Json e{{"column_of_edge", p.column_of_edge},
               {"diag_column", p.diag_column},
               {"alpha_radicands", std::move(alphas)},
               {"scale_c", to_string(p.scale_c)}};
        if (p.lifted_point) {
            e["lifted_point"] = *p.lifted_point;
        }
        e["offset"] = to_string(p.offset);
        e["signed_entries"] = p.signed_entries;
        j["embedding"] = std::move(e);
    }
    j["corruption"] = corruption_name(cert.corruption);
    return j;
}

ReductionCert cert_from_json(const Json& doc)
{
    ReductionCert c;
    c.id = parse_reduction_id(as_string(field(doc, "reduction"), "reduction"));
    c.from = kind_from(field(doc, "from"));
    c.to = kind_from(field(doc, "to"));
    c.source_n = as_index(field(doc, "source_n"), "source_n");
    c.target_n = as_index(field(doc, "target_n"), "target_n");
    for (const Json& kv : as_array(field(doc, "constants"), "constants")) {
        if (!kv.is_array() || kv.size() != 2) {
            throw ValidationError("constant must be [name, \"value\"]");
        }
        c.constants.emplace_back(as_string(kv[0], "constant name"), as_int(kv[1], "constant value"));
    }
    if (doc.contains("gadget")) {
        const Json& g = doc.at("gadget");
        NaeGadgetParams p;
        p.n = as_index(field(g, "n"), "gadget n");
        p.N = as_int(field(g, "N"), "N");
        p.L = as_int(field(g, "L"), "L");
        p.M = as_int(field(g, "M"), "M");
        p.delta_min = as_int(field(g, "delta_min"), "delta_min");
        p.delta_max = as_int(field(g, "delta_max"), "delta_max");
        for (const Json& r : as_array(field(g, "var_roles"), "var_roles")) {
            if (!r.is_array() || r.size() != 2) {
                throw ValidationError("variable role must be [role, index]");
            }
            p.var_roles.push_back({parse_role(as_string(r[0], "role")), as_index(r[1], "role index")});
        }
        c.gadget = std::move(p);
    }
    if (doc.contains("densest")) {
        const Json& d = doc.at("densest");
        DensestParams p;
        p.aux_base = as_int(field(d, "aux_base"), "aux_base");
        p.scale = as_int(field(d, "scale"), "scale");
        p.matching_size = as_int(field(d, "matching_size"), "matching_size");
        p.matching_weight = as_int(field(d, "matching_weight"), "matching_weight");
        for (const Json& pr : as_array(field(d, "matching_pairs"), "matching_pairs")) {
            const auto ab = int_list(pr, "matching pair");
            if (ab.size() != 2) {
                throw ValidationError("matching pair must be [a, b]");
            }
            p.matching_pairs.emplace_back(ab[0], ab[1]);
        }
        const Json& om = field(d, "oracle_mode");
        if (!om.is_boolean()) {
            throw ValidationError("oracle_mode must be a boolean");
        }
        p.oracle_mode = om.get<bool>();
        c.densest = std::move(p);
    }
    if (doc.contains("embedding")) {
        const Json& e = doc.at("embedding");
        EmbeddingParams p;
        p.column_of_edge = int_list(field(e, "column_of_edge"), "column_of_edge");
        p.diag_column = int_list(field(e, "diag_column"), "diag_column");
        for (const Json& a : as_array(field(e, "alpha_radicands"), "alpha_radicands")) {
            p.alpha_radicands.push_back(as_rat(a, "alpha radicand"));
        }
        p.scale_c = as_int(field(e, "scale_c"), "scale_c");
        if (e.contains("lifted_point")) {
            p.lifted_point = as_index(e.at("lifted_point"), "lifted_point");
        }
        p.offset = as_int(field(e, "offset"), "offset");
        const Json& se = field(e, "signed_entries");
        if (!se.is_boolean()) {
            throw ValidationError("signed_entries must be a boolean");
        }
        p.signed_entries = se.get<bool>();
        c.embedding = std::move(p);
    }
    c.corruption = parse_corruption(as_string(field(doc, "corruption"), "corruption"));
    return c;
}

Json composed_cert_to_json(const ComposedCert& cert)
{
    Json stages = Json::array();
    for (const ReductionCert& c : cert.stages) {
        stages.push_back(cert_to_json(c));
    }
    return Json{{"sizes", cert.sizes}, {"stages", std::move(stages)}};
}

ComposedCert composed_cert_from_json(const Json& doc)
{
    ComposedCert c;
    c.sizes = int_list(field(doc, "sizes"), "sizes");
    for (const Json& s : as_array(field(doc, "stages"), "stages")) {
        c.stages.push_back(cert_from_json(s));
    }
    if (c.stages.empty() || c.sizes.size() != c.stages.size() + 1) {
        throw ValidationError("certificate needs one more size than stages");
    }
    for (std::size_t i = 0; i < c.stages.size(); ++i) {
        if (c.stages[i].source_n != c.sizes[i] || c.stages[i].target_n != c.sizes[i + 1]) {
            throw ValidationError("certificate stage " + std::to_string(i) + " disagrees with the size list");
        }
        if (i > 0 && !(c.stages[i].from == c.stages[i - 1].to)) {
            throw ValidationError("certificate stage " + std::to_string(i) + " does not chain");
        }
    }
    return c;
}

Json trace_to_json(const Problem& problem, const SearchTrace& trace)
{
    Json moves = Json::array();
    for (const Move& m : trace.moves) {
        moves.push_back(Json{{"element", m.element}, {"target", m.target}, {"delta", rat_string(m.delta)}});
    }
    Json j;
    j["problem"] = kind_name(problem.kind().tag);
    j["start"] = labels_json(trace.start);
    j["start_cost"] = rat_string(problem.cost(trace.start));
    j["moves"] = std::move(moves);
    j["final"] = labels_json(trace.final_solution);
    j["final_cost"] = rat_string(problem.cost(trace.final_solution));
    j["iterations"] = trace.iterations;
    j["truncated"] = trace.truncated;
    return j;
}

Json transition_graph_to_json(const TransitionGraph& tg)
{
    Json nodes = Json::array();
    Json arcs = Json::array();
    for (std::size_t i = 0; i < tg.size(); ++i) {
        nodes.push_back(Json{{"id", i},
                             {"solution", labels_json(tg.node(i))},
                             {"cost", rat_string(tg.costs[i])},
                             {"height", tg.heights[i]},
                             {"sink", tg.is_sink(i)}});
        for (auto j : tg.succ[i]) {
            arcs.push_back(Json{{"from", i}, {"to", j}, {"delta", rat_string(tg.costs[j] - tg.costs[i])}});
        }
    }
    Json j;
    j["n"] = tg.n;
    j["k"] = tg.k;
    j["node_count"] = tg.size();
    j["arc_count"] = tg.arc_count();
    j["acyclic"] = tg.acyclic;
    j["nodes"] = std::move(nodes);
    j["arcs"] = std::move(arcs);
    return j;
}

std::string transition_graph_to_dot(const TransitionGraph& tg)
{
    std::ostringstream out;
    out << "digraph T {\n";
    for (std::size_t i = 0; i < tg.size(); ++i) {
        std::string labels;
        const Partition node = tg.node(i);
        for (int l : node.labels()) {
            labels += static_cast<char>('0' + l);
        }
        out << "  n" << i << " [label=\"" << labels << "\\ncost " << tg.costs[i].to_string() << "\\nheight "
            << tg.heights[i] << "\"" << (tg.is_sink(i) ? ", shape=doublecircle" : "") << "];\n";
    }
    for (std::size_t i = 0; i < tg.size(); ++i) {
        for (auto j : tg.succ[i]) {
            out << "  n" << i << " -> n" << j << " [label=\"" << (tg.costs[j] - tg.costs[i]).to_string() << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

Json preservation_to_json(const PreservationReport& rep)
{
    Json v = Json::array();
    for (const auto& x : rep.violations) {
        v.push_back(Json{{"target_sink", labels_json(x.target_sink)},
                         {"mapped", labels_json(x.mapped)},
                         {"improving_element", x.improving.element},
                         {"improving_target", x.improving.target},
                         {"improving_delta", rat_string(x.improving.delta)}});
    }
    return Json{{"suite", "preservation"},
                {"reduction", rep.reduction},
                {"digest", rep.digest},
                {"checked", rep.sinks_checked},
                {"oracle_mode", rep.oracle_mode},
                {"sampled", rep.sampled},
                {"solutions_sampled", rep.solutions_sampled},
                {"violations", std::move(v)}};
}

Json tightness_to_json(const TightnessReport& rep)
{
    return Json{{"suite", "tightness"},
                {"reduction", rep.reduction},
                {"digest", rep.digest},
                {"source_nodes", rep.source_nodes},
                {"target_nodes", rep.target_nodes},
                {"reasonable_nodes", rep.reasonable_nodes},
                {"violations", rep.violations}};
}

Json identities_to_json(const IdentityReport& rep)
{
    return Json{{"suite", "identities"},
                {"reduction", rep.reduction},
                {"digest", rep.digest},
                {"checked", rep.checked},
                {"violations", rep.violations}};
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace plslab::cli
