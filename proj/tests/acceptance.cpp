// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact.

#include "plslab/cli/app.hpp"
#include "plslab/cli/io.hpp"
#include "plslab/core/error.hpp"
#include "plslab/engine/search.hpp"
#include "plslab/problems/problem.hpp"
#include "plslab/reductions/reduction.hpp"
#include "plslab/verify/checks.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace plslab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " (" << seconds_since(t0) << "s)";
    std::cout << line.str() << std::endl;
    if (!o.pass) {
        ++failures;
    }
}

Instance graph_instance(ProblemTag tag, int n, const std::vector<std::tuple<int, int, int>>& edges)
{
    WeightedGraph g(n);
    for (const auto& [u, v, w] : edges) {
        g.set_weight(u, v, Int(w));
    }
    return Instance::of_graph(ProblemKind{tag}, std::move(g));
}

// --- gadget table -------------------------------------------------------------

Outcome gadget_table()
{
    const auto t0 = Clock::now();
    const Reduction r =
        r2_nae3(graph_instance(ProblemTag::DistinctMaxCutDeg5, 4, {{0, 1, 1}, {0, 2, 8}, {0, 3, 3}}));
    const NaeGadgetParams& p = *r.cert.gadget;
    // Δmax = 12 at v; N = 4 + 5 = 9, L = 64N, M = 5·Δmax·L + 32N + 1
    const Int n_big = 9;
    const Int l = 64 * n_big;
    const Int m = 5 * Int(12) * l + 32 * n_big + 1;
    std::vector<std::string> bad;
    const auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            bad.push_back(what);
        }
    };
    expect(p.N == n_big && p.L == l && p.M == m, "constants");
    const auto& cl = r.target.formula.clauses();
    expect(cl.size() == 3 + 6 + 9 * (8 + 2 + 2 + 2), "clause count");
    const std::vector<Int> level1{m, 8 * m, 3 * m};
    const std::vector<Int> level2{-l, -8 * l, -3 * l};
    for (std::size_t i = 0; i < 3; ++i) {
        expect(cl[i].lits == std::vector<int>{0, static_cast<int>(i) + 1} && cl[i].w == level1[i], "level 1");
        expect(cl[3 + i].lits == std::vector<int>{4, static_cast<int>(i) + 1} && cl[3 + i].w == level2[i],
               "level 2");
    }
    const std::vector<int> level3{-1, -1, 0, -1, 0, -1, 0, 0};
    for (std::size_t j = 0; j < 8; ++j) {
        expect(cl[9 + j].lits == std::vector<int>{0, 4, 8} && cl[9 + j].w == level3[j], "level 3");
    }
    const double t = seconds_since(t0);
    expect(t < 1.0, "time budget 1s");
    return {bad.empty(), "M=" + m.str() + " L=" + l.str() + " N=" + n_big.str() +
                             (bad.empty() ? "" : " mismatch: " + bad.front())};
}

// --- cost identities ---------------------------------------------------------

Outcome identities()
{
    const auto t0 = Clock::now();
    struct Plan {
        ReductionId id;
        int n;
    };
    // r7 n=8, r9 n=7, r10 n=7 (odd bisection source, n <= 8), r3/r4 13 variables
    const std::vector<Plan> plan{{ReductionId::R7, 8}, {ReductionId::R9, 7}, {ReductionId::R10, 7},
                                 {ReductionId::R3, 13}, {ReductionId::R4, 13}};
    std::uint64_t checked = 0;
    std::size_t bad = 0;
    std::string first;
    for (const Plan& p : plan) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const IdentityReport rep = check_identities(p.id, corpus_source(p.id, p.n, seed));
            checked += rep.checked;
            bad += rep.violations.size();
            if (!rep.ok() && first.empty()) {
                first = rep.reduction + ": " + rep.violations.front();
            }
        }
    }
    // K3, singleton cluster
    const Instance k3 = graph_instance(ProblemTag::DensestCut, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    const Rat k3_cost = cost(r7_two_means(k3).target, Partition({1, 0, 0}, 2));
    if (k3_cost != Rat(3)) {
        ++bad;
        first = "K3 cost " + k3_cost.to_string();
    }
    const double t = seconds_since(t0);
    const bool ok = bad == 0 && t < 120.0;
    return {ok, "5 reductions x 100 instances, " + std::to_string(checked) + " solutions, K3 cost " +
                    k3_cost.to_string() + ", violations=" + std::to_string(bad) + (first.empty() ? "" : " " + first) +
                    (t < 120.0 ? "" : " over 120s budget")};
}

// --- local-optimum preservation ---------------------------------------------

Outcome preservation()
{
    const auto t0 = Clock::now();
    // largest sizes whose target has at most 2^20 feasible solutions
    const std::vector<std::pair<ReductionId, int>> plan{
        {ReductionId::R1, 10},  {ReductionId::R2, 5},  {ReductionId::R3, 21}, {ReductionId::R4, 21},
        {ReductionId::R5Max, 21}, {ReductionId::R5Min, 21}, {ReductionId::R7, 20}, {ReductionId::R8, 11},
        {ReductionId::R9, 19}, {ReductionId::R10, 19}, {ReductionId::R11, 20},
    };
    std::uint64_t sinks = 0;
    std::size_t bad = 0;
    std::string first;
    const auto add = [&](const PreservationReport& rep) {
        sinks += rep.sinks_checked;
        bad += rep.violations.size();
        if (!rep.ok() && first.empty()) {
            first = rep.reduction + " digest " + rep.digest;
        }
    };
    for (const auto& [id, n] : plan) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            add(check_preservation(id, corpus_source(id, n, seed)));
        }
    }
    // r6 oracle mode: m = 8 matching edges (19 target vertices), scale 3^4
    ReductionOptions oracle;
    oracle.r6_matching_size = Int(8);
    oracle.r6_scale = Int(81);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        add(check_preservation(ReductionId::R6, corpus_source(ReductionId::R6, 3, seed), kDefaultCap, oracle));
    }
    // r6 at n^4 = 81 matching edges and scale n^9
    std::uint64_t sampled = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const PreservationReport rep = check_r6_sampled(corpus_source(ReductionId::R6, 3, seed), 1000, 20, seed);
        sampled += rep.solutions_sampled;
        add(rep);
    }
    const double t = seconds_since(t0);
    const bool ok = bad == 0 && sampled >= 10000 && t < 1800.0;
    return {ok, "11 reductions + r6 oracle x 100 instances, " + std::to_string(sampled) +
                    " sampled r6 solutions, sinks=" + std::to_string(sinks) + ", violations=" + std::to_string(bad) +
                    (first.empty() ? "" : " first " + first) + (t < 1800.0 ? "" : " over 30min budget")};
}

// --- full chain --------------------------------------------------------------

Outcome full_chain()
{
    const auto path = parse_reduction_path("r1,r2,r3,r4,r5min,r9");
    std::uint64_t sinks = 0;
    std::size_t bad = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const PreservationReport rep = check_chain_preservation(corpus_source(ReductionId::R1, 4, seed, true), path);
        sinks += rep.sinks_checked;
        bad += rep.violations.size();
    }
    return {bad == 0, "r1..r9 on 25 instances n=4, sinks=" + std::to_string(sinks) + ", violations=" +
                          std::to_string(bad)};
}

// --- distinctness -----------------------------------------------------------

Outcome distinctness()
{
    int bad = 0;
    int largest = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const WeightedGraph out = r1_distinct(corpus_source(ReductionId::R1, 10, seed)).target.graph;
        largest = std::max(largest, out.n());
        if (!check_distinct_costs(out).distinct) {
            ++bad;
        }
    }
    return {bad == 0, "100 r1 outputs from n=10 (up to " + std::to_string(largest) +
                          " vertices), non-distinct=" + std::to_string(bad)};
}

// --- tightness ---------------------------------------------------------------

Outcome tightness()
{
    const std::vector<std::pair<ReductionId, int>> plan{
        {ReductionId::R3, 7},  {ReductionId::R5Max, 7}, {ReductionId::R5Min, 7}, {ReductionId::R11, 8},
        {ReductionId::R7, 8},  {ReductionId::R8, 6},    {ReductionId::R9, 7},    {ReductionId::R10, 7},
    };
    std::size_t bad = 0;
    std::size_t nodes = 0;
    std::string first;
    for (const auto& [id, n] : plan) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const TightnessReport rep = check_tightness(id, corpus_source(id, n, seed));
            nodes += rep.target_nodes;
            bad += rep.violations.size();
            if (!rep.ok() && first.empty()) {
                first = rep.reduction + ": " + rep.violations.front();
            }
        }
    }
    return {bad == 0, "r3 r5max r5min r11 r7 r8 r9 r10 x 25 instances, target nodes=" + std::to_string(nodes) +
                          ", violations=" + std::to_string(bad) + (first.empty() ? "" : " " + first)};
}

// --- vertex types ------------------------------------------------------------

Outcome vertex_types()
{
    std::size_t typed = 0;
    std::size_t bad = 0;
    std::array<std::size_t, 3> per{};
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const WeightedGraph g = random_degree4_graph(8, 10, seed);
        for (int v = 0; v < g.n(); ++v) {
            const VertexType t = classify_vertex(g, v).vtype;
            if (t == VertexType::Other) {
                continue;
            }
            ++typed;
            ++per[static_cast<std::size_t>(t)];
            if (!check_typed_flip_distinct(g, v)) {
                ++bad;
            }
        }
    }
    const bool ok = bad == 0 && per[0] > 0 && per[1] > 0 && per[2] > 0;
    return {ok, "1000 graphs n=8, typed vertices=" + std::to_string(typed) + " (I " + std::to_string(per[0]) +
                    ", II " + std::to_string(per[1]) + ", III " + std::to_string(per[2]) +
                    "), violations=" + std::to_string(bad)};
}

// --- negative controls -------------------------------------------------------

Outcome negative_controls()
{
    const auto with = [](Corruption c) {
        ReductionOptions o;
        o.corruption = c;
        return o;
    };
    const Instance r2src = corpus_source(ReductionId::R2, 3, 0);
    const std::size_t l_equals_m =
        check_preservation(ReductionId::R2, r2src, kDefaultCap, with(Corruption::GadgetLEqualsM)).violations.size();
    const std::size_t signed_r9 =
        check_identities(ReductionId::R9, corpus_source(ReductionId::R9, 5, 0), with(Corruption::SignedEmbedding))
            .violations.size();
    ReductionOptions unit = with(Corruption::UnitMatchingWeight);
    unit.r6_matching_size = Int(4);
    unit.r6_scale = Int(81);
    const std::size_t unit_matching =
        check_preservation(ReductionId::R6, corpus_source(ReductionId::R6, 3, 0), kDefaultCap, unit).violations.size();
    const std::size_t wrong_tags =
        check_preservation(ReductionId::R2, r2src, kDefaultCap, with(Corruption::WrongLevelTags)).violations.size();
    const bool ok = l_equals_m > 0 && signed_r9 > 0 && unit_matching > 0 && wrong_tags > 0;
    return {ok, "L:=M " + std::to_string(l_equals_m) + ", signed r9 " + std::to_string(signed_r9) +
                    ", unit matching " + std::to_string(unit_matching) + ", wrong level tags " +
                    std::to_string(wrong_tags) + " violations"};
}

// --- determinism and round-trip ---------------------------------------------

namespace fs = std::filesystem;

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism()
{
    const fs::path dir = fs::temp_directory_path() / ("plslab_accept_" + std::to_string(::getpid()));
    std::vector<std::string> bad;
    std::size_t files = 0;
    for (const char* round : {"a", "b"}) {
        const fs::path d = dir / round;
        fs::create_directories(d);
        const auto f = [&](const char* name) { return (d / name).string(); };
        const std::vector<std::vector<std::string>> script{
            {"generate", "--kind", "maxcut5", "--n", "4", "--seed", "3", "--odd-degrees", "--out", f("g.json")},
            {"reduce", "--in", f("g.json"), "--path", "r1,r2,r3,r4,r5min,r9", "--out", f("t.json"), "--cert-out",
             f("c.json")},
            {"generate", "--kind", "odd-max-bisection", "--n", "3", "--seed", "1", "--out", f("b.json")},
            {"reduce", "--in", f("b.json"), "--path", "r6,r7,r8", "--out", f("k.json"), "--cert-out", f("kc.json")},
            {"generate", "--kind", "kmeans", "--k", "3", "--n", "7", "--seed", "2", "--out", f("km.json")},
            {"solve", "--in", f("t.json"), "--pivot", "best", "--trace-out", f("trace.json")},
            {"generate", "--kind", "maxcut", "--n", "5", "--seed", "4", "--out", f("m.json")},
            {"solve", "--in", f("m.json"), "--trace-out", f("trace2.json")},
            {"transition-graph", "--in", f("m.json"), "--format", "json", "--out", f("tg.json")},
            {"transition-graph", "--in", f("m.json"), "--format", "dot", "--out", f("tg.dot")},
            {"verify", "--suite", "all", "--trials", "2", "--seed", "9", "--report-out", f("report.json")},
        };
        std::ostringstream log;
        for (const auto& args : script) {
            std::ostringstream err;
            const int code = cli::run(args, log, err);
            if (code != cli::kOk) {
                bad.push_back(args[0] + " exit " + std::to_string(code) + " " + err.str());
            }
        }
        std::ofstream(d / "stdout.txt", std::ios::binary) << log.str();
        // the map-back input is the standard solution of the emitted target
        const Instance t = cli::instance_from_json(cli::parse_json(slurp(d / "t.json")));
        std::ofstream(d / "opt.json", std::ios::binary) << cli::dump(cli::solution_to_json(t.kind, standard_solution(t)));
        std::ostringstream out;
        std::ostringstream err;
        if (cli::run({"map-back", "--cert", f("c.json"), "--solution", f("opt.json"), "--out", f("back.json")}, out,
                     err) != cli::kOk) {
            bad.push_back("map-back " + err.str());
        }
    }
    for (const auto& entry : fs::directory_iterator(dir / "a")) {
        const std::string name = entry.path().filename().string();
        const std::string a = slurp(entry.path());
        ++files;
        if (a != slurp(dir / "b" / name)) {
            bad.push_back(name + " differs between runs");
        }
        if (entry.path().extension() != ".json") {
            continue;
        }
        // parse then serialize gives the same bytes
        const cli::Json doc = cli::parse_json(a);
        if (cli::dump(doc) != a) {
            bad.push_back(name + " not a dump fixed point");
        }
        std::string typed;
        if (doc.contains("stages")) {
            typed = cli::dump(cli::composed_cert_to_json(cli::composed_cert_from_json(doc)));
        } else if (doc.contains("assignment")) {
            ProblemKind kind{parse_kind_tag(doc["problem"].get<std::string>())};
            if (doc.contains("k")) {
                kind.k = doc["k"].get<int>();
            }
            const int n = static_cast<int>(doc["assignment"].size());
            typed = cli::dump(cli::solution_to_json(kind, cli::solution_from_json(doc, kind, n)));
        } else if (doc.contains("problem") && !doc.contains("moves")) {
            typed = cli::dump(cli::instance_to_json(cli::instance_from_json(doc)));
        } else {
            continue;
        }
        if (typed != a) {
            bad.push_back(name + " typed round-trip differs");
        }
    }
    fs::remove_all(dir);
    return {bad.empty(), std::to_string(files) + " files from two CLI runs" + (bad.empty() ? "" : ": " + bad.front())};
}

} // namespace

int main()
{
    report("gadget-table", gadget_table);
    report("cost-identities", identities);
    report("preservation", preservation);
    report("full-chain", full_chain);
    report("distinctness", distinctness);
    report("tightness", tightness);
    report("vertex-types", vertex_types);
    report("negative-controls", negative_controls);
    report("determinism-roundtrip", determinism);
    return failures == 0 ? 0 : 1;
}
