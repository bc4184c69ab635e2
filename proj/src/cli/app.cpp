#include "plslab/cli/app.hpp"

#include "plslab/cli/io.hpp"
#include "plslab/core/error.hpp"
#include "plslab/engine/search.hpp"
#include "plslab/engine/transition_graph.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/reductions/reduction.hpp"
#include "plslab/verify/checks.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace plslab::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot write '" + path + "'");
    }
    f << text;
}

Instance load_instance(const std::string& path)
{
    return instance_from_json(parse_json(read_file(path)));
}

Int parse_flag_int(const std::string& text, const char* flag)
{
    try {
        return parse_int(text);
    } catch (const ValidationError&) {
        throw ValidationError(std::string(flag) + " expects an integer, got '" + text + "'");
    }
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;
    std::string weight_max = "10";
    int k = 2;
    bool odd_degrees = false;
    std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out)
{
    ProblemKind kind{parse_kind_tag(a.kind)};
    if (kind.tag == ProblemTag::KMeans) {
        kind = ProblemKind::kmeans(a.k);
    }
    RandomSpec spec{kind, a.n, parse_flag_int(a.weight_max, "--weight-max"), a.seed, a.odd_degrees, false};
    write_output(a.out, dump(instance_to_json(random_instance(spec))), out);
    return kOk;
}

// --- validate ---------------------------------------------------------------

int cmd_validate(const std::string& path, std::ostream& out)
{
    const Instance inst = load_instance(path);
    const auto problems = validate_instance(inst);
    if (problems.empty()) {
        out << "ok " << kind_name(inst.kind) << " n=" << inst.size() << "\n";
        return kOk;
    }
    for (const auto& p : problems) {
        out << "invalid: " << p << "\n";
    }
    return kUsage;
}

// --- reduce -----------------------------------------------------------------

struct ReductionFlags {
    std::string r6_matching_size;
    std::string r6_scale;
    std::string r10_scale = "2";
    bool allow_non_distinct = false;
    std::string corrupt = "none";

    ReductionOptions options() const
    {
        ReductionOptions o;
        if (!r6_matching_size.empty()) {
            o.r6_matching_size = parse_flag_int(r6_matching_size, "--r6-matching-size");
        }
        if (!r6_scale.empty()) {
            o.r6_scale = parse_flag_int(r6_scale, "--r6-scale");
        }
        o.r10_scale = parse_flag_int(r10_scale, "--r10-scale");
        o.allow_non_distinct = allow_non_distinct;
        o.corruption = parse_corruption(corrupt);
        return o;
    }
};

void add_reduction_flags(CLI::App* sub, ReductionFlags& f)
{
    sub->add_option("--r6-matching-size", f.r6_matching_size, "r6 oracle mode: matching size instead of n^4");
    sub->add_option("--r6-scale", f.r6_scale, "r6 oracle mode: weight scale instead of n^9");
    sub->add_option("--r10-scale", f.r10_scale, "constant C of the Euclidean embedding")->capture_default_str();
    sub->add_flag("--allow-non-distinct", f.allow_non_distinct, "let r2 accept graphs with zero-delta flips");
    sub->add_option("--corrupt", f.corrupt)->group("");
}

struct ReduceArgs {
    std::string in;
    std::string path;
    std::string out;
    std::string cert_out;
    ReductionFlags flags;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out)
{
    const Instance src = load_instance(a.in);
    const auto path = parse_reduction_path(a.path);
    const ChainResult r = chain_reduce(src, path, a.flags.options());
    write_output(a.out, dump(instance_to_json(r.target)), out);
    if (!a.cert_out.empty()) {
        write_output(a.cert_out, dump(composed_cert_to_json(r.cert)), out);
    }
    return kOk;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
    std::string in;
    std::string start = "standard";
    std::string start_file;
    std::string pivot = "first";
    std::optional<std::size_t> max_iters;
    std::string trace_out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out)
{
    const Instance inst = load_instance(a.in);
    const auto problems = validate_instance(inst);
    if (!problems.empty()) {
        throw ValidationError(problems.front());
    }
    const Problem p(inst);
    Partition start = a.start == "standard"
                          ? initial_solution(inst)
                          : solution_from_json(parse_json(read_file(a.start_file)), inst.kind, inst.size());
    const PivotRule rule = a.pivot == "best" ? PivotRule::BestImprovement : PivotRule::FirstImprovement;
    const SearchTrace t = run_local_search(p, start, rule, a.max_iters);
    out << "cost " << p.cost(t.final_solution).to_string() << "\n";
    out << "iterations " << t.iterations << "\n";
    if (t.truncated) {
        out << "truncated\n";
    }
    if (!a.trace_out.empty()) {
        write_output(a.trace_out, dump(trace_to_json(p, t)), out);
    }
    return t.truncated ? kCap : kOk;
}

// --- map-back ---------------------------------------------------------------

int cmd_map_back(const std::string& cert_path, const std::string& solution_path, const std::string& out_path,
                 std::ostream& out)
{
    const ComposedCert cert = composed_cert_from_json(parse_json(read_file(cert_path)));
    const ProblemKind& to = cert.stages.back().to;
    const Partition t = solution_from_json(parse_json(read_file(solution_path)), to, cert.sizes.back());
    const Partition s = cert.map_solution(t);
    write_output(out_path, dump(solution_to_json(cert.stages.front().from, s)), out);
    return kOk;
}

// --- transition-graph -------------------------------------------------------

int cmd_transition_graph(const std::string& in, const std::string& format, std::optional<std::uint64_t> cap,
                         const std::string& out_path, std::ostream& out)
{
    const Instance inst = load_instance(in);
    const auto problems = validate_instance(inst);
    if (!problems.empty()) {
        throw ValidationError(problems.front());
    }
    const TransitionGraph tg = build_transition_graph(inst, cap.value_or(default_cap()));
    write_output(out_path, format == "dot" ? transition_graph_to_dot(tg) : dump(transition_graph_to_json(tg)), out);
    return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::string reduction;
    std::optional<int> n;
    int trials = 10;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::string report_out;
    ReductionFlags flags;
};

const std::vector<ReductionId>& all_reductions()
{
    static const std::vector<ReductionId> ids{
        ReductionId::R1, ReductionId::R2, ReductionId::R3,  ReductionId::R4,  ReductionId::R5Max, ReductionId::R5Min,
        ReductionId::R6, ReductionId::R7, ReductionId::R8, ReductionId::R9, ReductionId::R10,   ReductionId::R11,
    };
    return ids;
}

int default_size(const std::string& suite, ReductionId id)
{
    if (id == ReductionId::R2 || id == ReductionId::R6) {
        return 3;
    }
    if (suite == "tightness") {
        return id == ReductionId::R8 ? 4 : 5;
    }
    if (suite == "identities") {
        return id == ReductionId::R8 ? 5 : 7;
    }
    return id == ReductionId::R8 ? 6 : 9;
}

int fit_size(ReductionId id, int n)
{
    return is_odd_balanced(reduction_source(id)) && n % 2 == 0 ? n + 1 : n;
}

class VerifyRun {
public:
    VerifyRun(const VerifyArgs& a, std::ostream& out) : a_(a), out_(out) {}

    int execute()
    {
        const bool all = a_.suite == "all";
        std::vector<ReductionId> ids;
        if (!a_.reduction.empty()) {
            ids.push_back(parse_reduction_id(a_.reduction));
        } else {
            ids = all_reductions();
        }
        if (all || a_.suite == "preservation") {
            for (ReductionId id : ids) {
                preservation(id);
            }
        }
        if (all || a_.suite == "tightness") {
            for (ReductionId id : ids) {
                // r1 is not tight and r6 only enumerates in oracle mode; both run on request only.
                if (!a_.reduction.empty() || (id != ReductionId::R1 && id != ReductionId::R6)) {
                    tightness(id);
                }
            }
        }
        if (all || a_.suite == "identities") {
            for (ReductionId id : ids) {
                identities(id);
            }
        }
        if (all || a_.suite == "distinct") {
            distinct();
        }
        if (all || a_.suite == "types") {
            types();
        }
        Json report{{"suite", a_.suite},
                    {"seed", a_.seed},
                    {"trials", a_.trials},
                    {"total_violations", total_},
                    {"results", std::move(results_)}};
        if (!a_.report_out.empty()) {
            write_output(a_.report_out, dump(report), out_);
        }
        return total_ == 0 ? kOk : kViolations;
    }

private:
    // r6 enumerates only in oracle mode.
    ReductionOptions options_for(ReductionId id) const
    {
        ReductionOptions o = a_.flags.options();
        if (id == ReductionId::R6) {
            o.r6_matching_size = o.r6_matching_size.value_or(Int(4));
            o.r6_scale = o.r6_scale.value_or(Int(81));
        }
        return o;
    }

    int size_for(const std::string& suite, ReductionId id) const
    {
        return fit_size(id, a_.n.value_or(default_size(suite, id)));
    }

    void record(const std::string& suite, const std::string& name, int n, std::uint64_t checked, std::size_t bad,
                Json entries)
    {
        total_ += bad;
        out_ << suite << " " << name << " n=" << n << " trials=" << a_.trials << " checked=" << checked
             << " violations=" << bad << "\n";
        results_.push_back(Json{{"suite", suite},
                                {"reduction", name},
                                {"n", n},
                                {"checked", checked},
                                {"violations", bad},
                                {"instances", std::move(entries)}});
    }

    void preservation(ReductionId id)
    {
        const int n = size_for("preservation", id);
        const ReductionOptions o = options_for(id);
        Json entries = Json::array();
        std::uint64_t checked = 0;
        std::size_t bad = 0;
        for (int t = 0; t < a_.trials; ++t) {
            const Instance src = corpus_source(id, n, a_.seed + static_cast<std::uint64_t>(t));
            const PreservationReport rep = check_preservation(id, src, default_cap(), o);
            checked += rep.sinks_checked;
            bad += rep.violations.size();
            entries.push_back(preservation_to_json(rep));
            if (id == ReductionId::R6 && a_.samples > 0) {
                const PreservationReport s = check_r6_sampled(src, a_.samples, std::min<std::uint64_t>(a_.samples, 20),
                                                              a_.seed + static_cast<std::uint64_t>(t));
                checked += s.sinks_checked;
                bad += s.violations.size();
                entries.push_back(preservation_to_json(s));
            }
        }
        record("preservation", reduction_name(id), n, checked, bad, std::move(entries));
    }

    void tightness(ReductionId id)
    {
        const int n = size_for("tightness", id);
        const ReductionOptions o = options_for(id);
        Json entries = Json::array();
        std::uint64_t checked = 0;
        std::size_t bad = 0;
        for (int t = 0; t < a_.trials; ++t) {
            const Instance src = corpus_source(id, n, a_.seed + static_cast<std::uint64_t>(t));
            const TightnessReport rep = check_tightness(id, src, default_cap(), o);
            checked += rep.target_nodes;
            bad += rep.violations.size();
            entries.push_back(tightness_to_json(rep));
        }
        record("tightness", reduction_name(id), n, checked, bad, std::move(entries));
    }

    void identities(ReductionId id)
    {
        const int n = size_for("identities", id);
        const ReductionOptions o = a_.flags.options();
        Json entries = Json::array();
        std::uint64_t checked = 0;
        std::size_t bad = 0;
        for (int t = 0; t < a_.trials; ++t) {
            const Instance src = corpus_source(id, n, a_.seed + static_cast<std::uint64_t>(t));
            const IdentityReport rep = check_identities(id, src, o);
            checked += rep.checked;
            bad += rep.violations.size();
            entries.push_back(identities_to_json(rep));
        }
        record("identities", reduction_name(id), n, checked, bad, std::move(entries));
    }

    void distinct()
    {
        const int n = a_.n.value_or(8);
        Json entries = Json::array();
        std::size_t bad = 0;
        for (int t = 0; t < a_.trials; ++t) {
            const Instance src = corpus_source(ReductionId::R1, n, a_.seed + static_cast<std::uint64_t>(t));
            const Instance out = reduce(ReductionId::R1, src).target;
            const DistinctResult d = check_distinct_costs(out.graph, default_cap());
            Json e{{"suite", "distinct"}, {"digest", instance_digest(src)}, {"distinct", d.distinct}};
            if (!d.distinct) {
                ++bad;
                e["cut"] = d.cut->labels();
                e["vertex"] = *d.vertex;
            }
            entries.push_back(std::move(e));
        }
        record("distinct", "r1", n, static_cast<std::uint64_t>(a_.trials), bad, std::move(entries));
    }

    void types()
    {
        const int n = a_.n.value_or(7);
        Json entries = Json::array();
        std::uint64_t checked = 0;
        std::size_t bad = 0;
        for (int t = 0; t < a_.trials; ++t) {
            const WeightedGraph g = random_degree4_graph(n, 10, a_.seed + static_cast<std::uint64_t>(t));
            Json typed = Json::array();
            for (int v = 0; v < n; ++v) {
                const VertexTypeReport r = classify_vertex(g, v);
                if (r.vtype == VertexType::Other) {
                    continue;
                }
                ++checked;
                const bool ok = check_typed_flip_distinct(g, v, default_cap());
                bad += ok ? 0 : 1;
                typed.push_back(Json{{"vertex", v}, {"type", vertex_type_name(r.vtype)}, {"distinct", ok}});
            }
            entries.push_back(Json{{"suite", "types"},
                                   {"digest", instance_digest(Instance::of_graph(ProblemKind{}, g))},
                                   {"vertices", std::move(typed)}});
        }
        record("types", "-", n, checked, bad, std::move(entries));
    }

    const VerifyArgs& a_;
    std::ostream& out_;
    std::size_t total_ = 0;
    Json results_ = Json::array();
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact local-search lab for Flip-neighbourhood PLS problems and their reductions", "plslab"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "write a seeded random instance");
    g->add_option("--kind", gen.kind, "problem tag, e.g. maxcut5 or odd-min-bisection")->required();
    g->add_option("--n", gen.n, "element count")->required();
    g->add_option("--seed", gen.seed)->capture_default_str();
    g->add_option("--weight-max", gen.weight_max)->capture_default_str();
    g->add_option("--k", gen.k, "cluster count for kmeans")->capture_default_str();
    g->add_flag("--odd-degrees", gen.odd_degrees, "every vertex has odd degree");
    g->add_option("--out", gen.out, "output file (default stdout)");

    std::string validate_in;
    auto* v = app.add_subcommand("validate", "check an instance file");
    v->add_option("--in", validate_in)->required();

    ReduceArgs red;
    auto* r = app.add_subcommand("reduce", "apply a chain of reductions");
    r->add_option("--in", red.in)->required();
    r->add_option("--path", red.path, "comma-separated reduction ids, e.g. r1,r2")->required();
    r->add_option("--out", red.out, "target instance (default stdout)");
    r->add_option("--cert-out", red.cert_out, "certificate for map-back");
    add_reduction_flags(r, red.flags);

    SolveArgs sol;
    auto* s = app.add_subcommand("solve", "run Flip local search");
    s->add_option("--in", sol.in)->required();
    s->add_option("--start", sol.start)->check(CLI::IsMember({"standard", "file"}))->capture_default_str();
    s->add_option("--start-file", sol.start_file, "solution file used with --start file");
    s->add_option("--pivot", sol.pivot)->check(CLI::IsMember({"first", "best"}))->capture_default_str();
    s->add_option("--max-iters", sol.max_iters);
    s->add_option("--trace-out", sol.trace_out);

    std::string mb_cert;
    std::string mb_solution;
    std::string mb_out;
    auto* m = app.add_subcommand("map-back", "map a target solution to the source instance");
    m->add_option("--cert", mb_cert)->required();
    m->add_option("--solution", mb_solution)->required();
    m->add_option("--out", mb_out);

    VerifyArgs ver;
    auto* vf = app.add_subcommand("verify", "run brute-force verification suites");
    vf->add_option("--suite", ver.suite)
        ->check(CLI::IsMember({"preservation", "tightness", "identities", "distinct", "types", "all"}))
        ->capture_default_str();
    vf->add_option("--reduction", ver.reduction, "restrict to one reduction id");
    vf->add_option("--n", ver.n, "source size (defaults per reduction)");
    vf->add_option("--trials", ver.trials)->check(CLI::NonNegativeNumber)->capture_default_str();
    vf->add_option("--seed", ver.seed)->capture_default_str();
    vf->add_option("--samples", ver.samples, "r6: sampled target solutions at full constants")->capture_default_str();
    vf->add_option("--report-out", ver.report_out);
    add_reduction_flags(vf, ver.flags);

    std::string tg_in;
    std::string tg_format = "json";
    std::optional<std::uint64_t> tg_cap;
    std::string tg_out;
    auto* t = app.add_subcommand("transition-graph", "export the transition graph T(x)");
    t->add_option("--in", tg_in)->required();
    t->add_option("--format", tg_format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    t->add_option("--cap", tg_cap, "feasible-solution cap (default PLSLAB_CAP or 2^20)");
    t->add_option("--out", tg_out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (g->parsed()) {
            return cmd_generate(gen, out);
        }
        if (v->parsed()) {
            return cmd_validate(validate_in, out);
        }
        if (r->parsed()) {
            return cmd_reduce(red, out);
        }
        if (s->parsed()) {
            if (sol.start == "file" && sol.start_file.empty()) {
                throw ValidationError("--start file needs --start-file");
            }
            return cmd_solve(sol, out);
        }
        if (m->parsed()) {
            return cmd_map_back(mb_cert, mb_solution, mb_out, out);
        }
        if (vf->parsed()) {
            return VerifyRun(ver, out).execute();
        }
        if (t->parsed()) {
            return cmd_transition_graph(tg_in, tg_format, tg_cap, tg_out, out);
        }
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace plslab::cli
