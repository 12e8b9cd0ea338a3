// Command-line surface for the partial degree bounded edge packing toolkit.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 invalid input,
// 4 enumeration cap exceeded. Reports go to stdout, diagnostics to stderr.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcb/approx.hpp"
#include "pcb/errors.hpp"
#include "pcb/exact.hpp"
#include "pcb/gen.hpp"
#include "pcb/graph.hpp"
#include "pcb/io.hpp"
#include "pcb/reductions.hpp"
#include "pcb/report.hpp"
#include "pcb/strings.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_isolate_free(const pcb::Graph& g) {
    if (auto v = g.first_isolated_vertex())
        throw pcb::InvalidInputError("isolated vertex " + std::to_string(*v));
}

void emit(const pcb::SolveReport& report, bool json) {
    if (json)
        std::cout << pcb::report_to_json(report) << "\n";
    else
        std::cout << pcb::report_to_text(report);
}

// Splits a forest into connected components and solves each by the tree DP.
pcb::SolveReport solve_forest(const pcb::Graph& g, int c) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = comp_count;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }
    std::vector<std::vector<int>> vertices(comp_count);
    for (int v = 0; v < n; ++v) vertices[comp[v]].push_back(v);

    pcb::SolveReport report;
    report.problem = "pcb";
    report.method = "tree-dp";
    report.c = c;
    report.n = n;
    report.m = g.edge_count();
    for (int k = 0; k < comp_count; ++k) {
        std::vector<int> local(n, -1);
        for (size_t i = 0; i < vertices[k].size(); ++i) local[vertices[k][i]] = static_cast<int>(i);
        std::vector<pcb::Edge> edges;
        for (const pcb::Edge& e : g.edges())
            if (comp[e.u] == k) edges.push_back(pcb::Edge{local[e.u], local[e.v]});
        const pcb::Graph sub(static_cast<int>(vertices[k].size()), std::move(edges));
        if (sub.edge_count() != sub.vertex_count() - 1)
            throw pcb::InvalidInputError("component is not a tree");
        const pcb::SolveReport part = pcb::max_pcb_tree(sub, c);
        for (const pcb::Edge& e : part.witness_edges) {
            const int u = vertices[k][e.u], v = vertices[k][e.v];
            report.witness_edges.push_back(pcb::Edge{std::min(u, v), std::max(u, v)});
        }
    }
    std::sort(report.witness_edges.begin(), report.witness_edges.end());
    pcb::revalidate(g, report);
    return report;
}

bool is_forest(const pcb::Graph& g) {
    // Acyclic iff every component has size-1 edges; count via union-find.
    std::vector<int> root(g.vertex_count());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const pcb::Edge& e : g.edges()) {
        const int a = find(e.u), b = find(e.v);
        if (a == b) return false;
        root[a] = b;
    }
    return true;
}

pcb::SolveReport run_solver(const pcb::Graph& g, int c, std::string method,
                            uint64_t seed, bool seed_given) {
    require_isolate_free(g);
    if (method == "auto") {
        if (is_forest(g))
            method = "tree-dp";
        else if (g.edge_count() <= pcb::kBruteForceEdgeCap)
            method = "brute";
        else if (c == 1)
            method = "approx-p1b";
        else if (c == 2)
            method = "approx-p2b-det";
        else
            throw pcb::CapExceededError(
                "no method fits: graph exceeds the brute-force cap and c > 2 "
                "has no approximation");
    }
    if (method == "brute") return pcb::max_pcb_bruteforce(g, c);
    if (method == "tree-dp") return solve_forest(g, c);
    if (method == "approx-p1b") {
        if (c != 1) throw CLI::ValidationError("--method approx-p1b requires --c 1");
        return pcb::approx_p1b(g);
    }
    if (method == "approx-p2b-rand" || method == "approx-p2b-det") {
        if (c != 2)
            throw CLI::ValidationError("--method " + method + " requires --c 2");
        pcb::Bipartition bp = method == "approx-p2b-rand"
                                  ? pcb::approx_p2b_randomized(g, seed)
                                  : pcb::approx_p2b_derandomized(g);
        pcb::SolveReport report;
        report.problem = "pcb";
        report.method = method;
        report.c = 2;
        report.n = g.vertex_count();
        report.m = g.edge_count();
        report.witness_edges = bp.selected.chosen();
        if (method == "approx-p2b-rand") report.seed = seed;
        pcb::revalidate(g, report);
        return report;
    }
    (void)seed_given;
    throw CLI::ValidationError("unknown method '" + method + "'");
}

int run_bench(uint64_t seed) {
    struct Row {
        std::string kind, method;
        int n, m, c, value;
        double ms;
    };
    std::vector<Row> rows;
    auto time_solver = [&](const std::string& kind, const pcb::Graph& g, int c,
                           const std::string& method) {
        const auto start = Clock::now();
        const pcb::SolveReport r = run_solver(g, c, method, seed, true);
        rows.push_back(
            {kind, method, g.vertex_count(), g.edge_count(), c, r.value, ms_since(start)});
    };

    pcb::GenSpec spec;
    spec.kind = pcb::GenKind::RandomTree;
    spec.n = 2000;
    spec.seed = seed;
    const pcb::Graph tree = pcb::generate_graph(spec);
    time_solver("random-tree", tree, 2, "tree-dp");

    spec.kind = pcb::GenKind::RandomGraph;
    spec.n = 12;
    spec.m = 22;
    spec.min_degree = 1;
    const pcb::Graph small = pcb::generate_graph(spec);
    time_solver("random-graph", small, 1, "brute");
    time_solver("random-graph", small, 2, "brute");
    time_solver("random-graph", small, 1, "approx-p1b");

    spec.n = 200;
    spec.m = 500;
    spec.min_degree = 3;
    const pcb::Graph big = pcb::generate_graph(spec);
    time_solver("random-graph", big, 2, "approx-p2b-rand");
    time_solver("random-graph", big, 2, "approx-p2b-det");

    spec.kind = pcb::GenKind::BipartiteExtremal;
    spec.c = 2;
    spec.n = 11;
    const pcb::Graph extremal = pcb::generate_graph(spec);
    time_solver("bipartite-extremal", extremal, 2, "brute");

    std::cout << std::left << std::setw(20) << "kind" << std::setw(17) << "method"
              << std::right << std::setw(6) << "n" << std::setw(6) << "m"
              << std::setw(3) << "c" << std::setw(7) << "value" << std::setw(10)
              << "ms" << "\n";
    std::cout << std::fixed << std::setprecision(2);
    for (const Row& r : rows)
        std::cout << std::left << std::setw(20) << r.kind << std::setw(17) << r.method
                  << std::right << std::setw(6) << r.n << std::setw(6) << r.m
                  << std::setw(3) << r.c << std::setw(7) << r.value << std::setw(10)
                  << r.ms << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial degree bounded edge packing toolkit"};
    app.require_subcommand(1);

    std::string input, subgraph_path, method = "auto", kind_name = "random-graph";
    std::string meis_action, width_arg;
    int c = 1, max_n = 5, gen_n = 8, gen_m = -1, gen_min_degree = 0, gen_c = 1;
    int gen_width = 0, gen_count = 0, meis_width = -1;
    uint64_t seed = 0;
    bool json = false;
    std::vector<std::string> claim_ids;

    auto* solve = app.add_subcommand("solve", "maximum partial-c-bounded subgraph");
    solve->add_option("--input", input, "graph file")->required();
    solve->add_option("--c", c, "degree bound")->required()->check(CLI::PositiveNumber);
    solve->add_option("--method", method,
                      "auto|brute|tree-dp|approx-p1b|approx-p2b-rand|approx-p2b-det");
    solve->add_option("--seed", seed, "seed for randomized methods");
    solve->add_flag("--json", json, "one JSON report per line");

    auto* check = app.add_subcommand("check", "validate a claimed selection");
    check->add_option("--input", input, "graph file")->required();
    check->add_option("--c", c, "degree bound")->required()->check(CLI::PositiveNumber);
    check->add_option("--subgraph", subgraph_path, "selection file (graph format)")
        ->required();
    check->add_flag("--json", json, "one JSON report per line");

    auto* meis = app.add_subcommand("meis", "expressible-independence operations");
    meis->add_option("action", meis_action, "check|solve|to-graph|from-graph")
        ->required();
    meis->add_option("--input", input, "strings file (graph file for from-graph)")
        ->required();
    meis->add_option("--width", meis_width, "string width for from-graph");
    meis->add_flag("--json", json, "one JSON report per line");

    auto* reduce = app.add_subcommand("reduce", "reduction gadgets");
    std::string reduction = "p1b-to-pcb";
    reduce->add_option("gadget", reduction, "p1b-to-pcb")->required();
    reduce->add_option("--input", input, "graph file")->required();
    reduce->add_option("--c", c, "target degree bound")->required()
        ->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "deterministic instance generators");
    gen->add_option("--kind", kind_name,
                    "random-graph|random-tree|bipartite-extremal|"
                    "random-2regular-strings|path|cycle|star|double-star|complete");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--m", gen_m, "edge count (random-graph)");
    gen->add_option("--min-degree", gen_min_degree, "minimum degree (random-graph)");
    gen->add_option("--c", gen_c, "parameter for bipartite-extremal/double-star");
    gen->add_option("--width", gen_width, "string width");
    gen->add_option("--count", gen_count, "string count");
    gen->add_option("--seed", seed, "generator seed");

    auto* audit = app.add_subcommand("audit", "empirical claim audits");
    audit->add_option("--max-n", max_n, "largest vertex count (<= 7)");
    audit->add_option("--claims", claim_ids, "claim ids (default: all)");
    audit->add_option("--seed", seed, "sampling seed");
    audit->add_flag("--json", json, "machine-readable report");

    auto* bench = app.add_subcommand("bench", "generators x solvers timing table");
    bench->add_option("--seed", seed, "bench seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (solve->parsed()) {
            const auto start = Clock::now();
            const pcb::Graph g = pcb::load_graph_file(input);
            pcb::SolveReport report =
                run_solver(g, c, method, seed, solve->count("--seed") > 0);
            report.elapsed_ms = ms_since(start);
            emit(report, json);
        } else if (check->parsed()) {
            const auto start = Clock::now();
            const pcb::Graph g = pcb::load_graph_file(input);
            const pcb::Graph claimed = pcb::load_graph_file(subgraph_path);
            if (claimed.vertex_count() != g.vertex_count())
                throw pcb::InvalidInputError("subgraph has a different vertex count");
            pcb::SolveReport report;
            report.problem = "pcb";
            report.method = "check";
            report.c = c;
            report.n = g.vertex_count();
            report.m = g.edge_count();
            report.witness_edges = claimed.edges(); // subset enforced by revalidate
            pcb::revalidate(g, report);
            report.elapsed_ms = ms_since(start);
            emit(report, json);
        } else if (meis->parsed()) {
            const auto start = Clock::now();
            if (meis_action == "solve") {
                const pcb::StringSet w = pcb::load_strings_file(input);
                const pcb::MeisResult result = pcb::max_meis_bruteforce(w);
                pcb::SolveReport report;
                report.problem = "meis";
                report.method = "brute";
                report.n = w.size();
                report.m = w.width();
                for (int idx : result.witness_indices)
                    report.witness_strings.push_back(w.at(idx).str());
                pcb::revalidate_meis(w, report);
                report.elapsed_ms = ms_since(start);
                emit(report, json);
            } else if (meis_action == "check") {
                const pcb::StringSet w = pcb::load_strings_file(input);
                const pcb::EiVerdict verdict = pcb::is_expressible_independent(w);
                nlohmann::ordered_json j;
                j["problem"] = "meis";
                j["method"] = "check";
                j["n"] = w.size();
                j["m"] = w.width();
                j["verdict"] = verdict.ok ? "ok" : "expressible";
                if (!verdict.ok) {
                    j["member"] = "s" + std::to_string(verdict.member_index);
                    j["string"] = w.at(verdict.member_index).str();
                    j["formula"] = verdict.witness->str();
                }
                j["elapsed_ms"] = ms_since(start);
                if (json) {
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n";
                    if (!verdict.ok)
                        std::cout << "member:   s" << verdict.member_index << " = "
                                  << w.at(verdict.member_index).str() << "\n"
                                  << "formula:  " << verdict.witness->str() << "\n";
                }
            } else if (meis_action == "to-graph") {
                const pcb::StringSet w = pcb::load_strings_file(input);
                pcb::save_graph(std::cout, pcb::meis2_to_graph(w));
            } else if (meis_action == "from-graph") {
                const pcb::Graph g = pcb::load_graph_file(input);
                const pcb::StringSet w = meis_width > 0
                                             ? pcb::graph_to_meis2(g, meis_width)
                                             : pcb::graph_to_meis2(g);
                pcb::save_strings(std::cout, w);
            } else {
                std::cerr << "unknown meis action '" << meis_action << "'\n";
                return 1;
            }
        } else if (reduce->parsed()) {
            if (reduction != "p1b-to-pcb") {
                std::cerr << "unknown reduction '" << reduction << "'\n";
                return 1;
            }
            const pcb::Graph g = pcb::load_graph_file(input);
            pcb::save_graph(std::cout, pcb::p1b_to_pcb_gadget(g, c));
        } else if (gen->parsed()) {
            pcb::GenSpec spec;
            spec.kind = pcb::parse_gen_kind(kind_name);
            spec.n = gen_n;
            spec.m = gen_m;
            spec.min_degree = gen_min_degree;
            spec.c = gen_c;
            spec.width = gen_width;
            spec.count = gen_count;
            spec.seed = seed;
            const auto instance = pcb::generate(spec);
            if (const auto* g = std::get_if<pcb::Graph>(&instance))
                pcb::save_graph(std::cout, *g);
            else
                pcb::save_strings(std::cout, std::get<pcb::StringSet>(instance));
        } else if (audit->parsed()) {
            const pcb::AuditReport report = pcb::audit_claims(max_n, claim_ids, seed);
            std::cout << (json ? pcb::audit_to_json(report) : pcb::audit_to_text(report));
            if (json) std::cout << "\n";
        } else if (bench->parsed()) {
            return run_bench(seed);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const pcb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const pcb::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const pcb::InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const pcb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
