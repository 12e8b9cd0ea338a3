#include "pcb/reductions.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "pcb/errors.hpp"
#include "pcb/exact.hpp"
#include "pcb/gen.hpp"
#include "pcb/io.hpp"
#include "pcb/rng.hpp"

namespace pcb {

Graph meis2_to_graph(const StringSet& w) {
    if (!w.is_c_regular(2)) throw InvalidInputError("set is not 2-regular");
    std::vector<Edge> edges;
    edges.reserve(w.size());
    for (const auto& s : w.members()) {
        const auto ones = s.one_indices();
        edges.push_back(Edge{ones[0] - 1, ones[1] - 1});
    }
    return Graph(w.width(), std::move(edges));
}

StringSet graph_to_meis2(const Graph& g) { return graph_to_meis2(g, g.vertex_count()); }

StringSet graph_to_meis2(const Graph& g, int width) {
    if (width < g.vertex_count())
        throw InvalidInputError("width must cover every vertex id");
    std::vector<BitString> members;
    members.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        BitString s(width);
        s.set(e.u + 1, true);
        s.set(e.v + 1, true);
        members.push_back(std::move(s));
    }
    return StringSet(std::move(members));
}

Graph p1b_to_pcb_gadget(const Graph& g, int c) {
    if (c < 2) throw InvalidInputError("gadget needs c >= 2");
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (int k = 0; k < c - 1; ++k) {
        const int extra = n + k;
        for (int v = 0; v < n; ++v) edges.push_back(Edge{v, extra});
    }
    return Graph(n + c - 1, std::move(edges));
}

int tree_recurrence_restricted_value(const Graph& t, int c) {
    if (c < 1) throw InvalidInputError("c must be >= 1");
    const int n = t.vertex_count();
    if (n < 2 || t.edge_count() != n - 1)
        throw InvalidInputError("input is not a tree");

    std::vector<int> parent(n, -1), order;
    std::vector<std::vector<int>> children(n);
    order.push_back(0);
    parent[0] = 0;
    for (size_t head = 0; head < order.size(); ++head)
        for (int w : t.neighbors(order[head]))
            if (parent[w] == -1) {
                parent[w] = order[head];
                children[order[head]].push_back(w);
                order.push_back(w);
            }
    if (static_cast<int>(order.size()) != n)
        throw InvalidInputError("input is not connected");

    using Cell = std::optional<int>;
    // Bucket values per vertex: [0] best with fewer than c chosen children,
    // [1] exactly c, [2] more than c.
    std::vector<std::array<Cell, 3>> bucket(n);
    auto max_cell = [](Cell& into, const Cell& from) {
        if (from && (!into || *from > *into)) into = from;
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int u = *it;
        const int d = static_cast<int>(children[u].size());
        std::vector<Cell> f(d + 1);
        f[0] = 0;
        for (int i = 0; i < d; ++i) {
            const int v = children[u][i];
            Cell skip_gain, take_any, take_low;
            max_cell(skip_gain, bucket[v][0]);
            max_cell(skip_gain, bucket[v][1]);
            max_cell(skip_gain, bucket[v][2]);
            max_cell(take_any, bucket[v][0]);
            max_cell(take_any, bucket[v][2]); // the exactly-c state is never extended
            take_low = bucket[v][0];
            std::vector<Cell> next(d + 1);
            for (int q = 0; q <= i + 1; ++q) {
                if (f[q] && skip_gain) max_cell(next[q], Cell(*f[q] + *skip_gain));
                if (q >= 1 && f[q - 1]) {
                    const Cell& gain = q <= c ? take_any : take_low;
                    if (gain) max_cell(next[q], Cell(*f[q - 1] + 1 + *gain));
                }
            }
            f = std::move(next);
        }
        for (int q = 0; q <= d; ++q) {
            const int slot = q < c ? 0 : (q == c ? 1 : 2);
            max_cell(bucket[u][slot], f[q]);
        }
    }
    Cell best;
    for (const Cell& cell : bucket[0]) max_cell(best, cell);
    return *best;
}

void for_each_labeled_graph(int n, bool isolate_free_only,
                            const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw InvalidInputError("labeled enumeration supports 1 <= n <= 7");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back(Edge{u, v});
    const uint64_t total = uint64_t{1} << slots.size();
    std::vector<Edge> edges;
    for (uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1) edges.push_back(slots[b]);
        Graph g(n, edges);
        if (isolate_free_only && !g.is_isolate_free()) continue;
        fn(g);
    }
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 2 || n > 8) throw InvalidInputError("tree enumeration supports 2 <= n <= 8");
    if (n == 2) {
        fn(Graph(2, {Edge{0, 1}}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        // Pruefer decode of seq.
        std::vector<int> degree(n, 1);
        for (int x : seq) ++degree[x];
        std::vector<Edge> edges;
        int ptr = 0;
        while (degree[ptr] != 1) ++ptr;
        int leaf = ptr;
        for (int x : seq) {
            edges.push_back(Edge{std::min(leaf, x), std::max(leaf, x)});
            if (--degree[x] == 1 && x < ptr) {
                leaf = x;
            } else {
                ++ptr;
                while (degree[ptr] != 1) ++ptr;
                leaf = ptr;
            }
        }
        edges.push_back(Edge{leaf, n - 1});
        fn(Graph(n, std::move(edges)));
        // next sequence
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

namespace {

constexpr int kSamplesPerN = 120;

std::string claim_description(const std::string& id) {
    if (id == "duality") return "opt_p1b(g) = n - gamma(g) on isolate-free graphs";
    if (id == "gadget")
        return "opt_pcb(gadget(g,c)) = opt_p1b(g) + (c-1)*n for c in {2,3}";
    if (id == "thm10") return "pcb optima obey |E| <= c*(n-c) when n >= 2c+1, c in {1,2}";
    if (id == "thm10-unguarded")
        return "|E| <= c*(n-c) with the n >= 2c+1 guard dropped (c=2)";
    if (id == "meis-p2b") return "meis optimum equals p2b optimum under the 2-regular map";
    if (id == "tree-recurrence")
        return "restricted tree recurrence (exactly-c states never extended, root 0) "
               "matches the exact optimum, c in {1,2}";
    throw InvalidInputError("unknown claim id '" + id + "'");
}

// Enumerated graphs for n <= 5, seeded samples above. Sampled graphs are
// isolate-free with n-1..min(22, all) edges.
void for_each_audit_graph(int n, uint64_t seed,
                          const std::function<void(const Graph&)>& fn) {
    if (n <= 5) {
        for_each_labeled_graph(n, /*isolate_free_only=*/true, fn);
        return;
    }
    const long long all = static_cast<long long>(n) * (n - 1) / 2;
    SplitMix64 rng(seed + n);
    for (int i = 0; i < kSamplesPerN; ++i) {
        GenSpec spec;
        spec.kind = GenKind::RandomGraph;
        spec.n = n;
        const long long hi = std::min<long long>(all, kBruteForceEdgeCap);
        spec.m = static_cast<int>(n - 1 + rng.below(hi - (n - 1) + 1));
        spec.min_degree = 1;
        spec.seed = rng.next();
        fn(generate_graph(spec));
    }
}

void audit_duality(ClaimReport& out, int max_n, uint64_t seed) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_audit_graph(n, seed, [&](const Graph& g) {
            if (g.edge_count() > kBruteForceEdgeCap) {
                ++out.instances_skipped;
                return;
            }
            ++out.instances_checked;
            const long long opt = max_pcb_bruteforce(g, 1).value;
            const long long gamma =
                static_cast<long long>(min_dominating_bruteforce(g).size());
            const long long predicted = g.vertex_count() - gamma;
            if (opt != predicted)
                out.counterexamples.push_back({graph_to_string(g), 1, opt, predicted,
                                               "opt_p1b vs n - gamma"});
        });
    }
}

void audit_gadget(ClaimReport& out, int max_n, uint64_t seed) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_audit_graph(n, seed, [&](const Graph& g) {
            for (int c : {2, 3}) {
                const Graph big = p1b_to_pcb_gadget(g, c);
                if (g.edge_count() > kBruteForceEdgeCap ||
                    big.edge_count() > kBruteForceEdgeCap) {
                    ++out.instances_skipped;
                    continue;
                }
                ++out.instances_checked;
                const long long observed = max_pcb_bruteforce(big, c).value;
                const long long predicted =
                    max_pcb_bruteforce(g, 1).value +
                    static_cast<long long>(c - 1) * g.vertex_count();
                if (observed != predicted)
                    out.counterexamples.push_back(
                        {graph_to_string(g), c, observed, predicted,
                         "opt_pcb(gadget) vs opt_p1b + (c-1)*n"});
            }
        });
    }
}

void audit_thm10(ClaimReport& out, int max_n, uint64_t seed, bool guarded) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_audit_graph(n, seed, [&](const Graph& g) {
            for (int c : guarded ? std::vector<int>{1, 2} : std::vector<int>{2}) {
                if (guarded && g.vertex_count() < 2 * c + 1) continue;
                if (g.edge_count() > kBruteForceEdgeCap) {
                    ++out.instances_skipped;
                    continue;
                }
                ++out.instances_checked;
                const long long observed = max_pcb_bruteforce(g, c).value;
                const long long bound =
                    static_cast<long long>(c) * (g.vertex_count() - c);
                if (observed > bound)
                    out.counterexamples.push_back({graph_to_string(g), c, observed, bound,
                                                   "pcb optimum vs c*(n-c)"});
            }
        });
    }
}

void audit_meis_p2b(ClaimReport& out, int max_n, uint64_t seed) {
    for (int n = 2; n <= max_n; ++n) {
        for_each_audit_graph(n, seed, [&](const Graph& g) {
            if (g.edge_count() > kMeisMemberCap ||
                g.edge_count() > kBruteForceEdgeCap || g.edge_count() == 0) {
                ++out.instances_skipped;
                return;
            }
            ++out.instances_checked;
            const StringSet w = graph_to_meis2(g);
            const long long observed = max_meis_bruteforce(w).size;
            const long long predicted = max_pcb_bruteforce(g, 2).value;
            if (observed != predicted)
                out.counterexamples.push_back({strings_to_string(w), 2, observed,
                                               predicted, "meis vs p2b optimum"});
        });
    }
}

void audit_tree_recurrence(ClaimReport& out, int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            for (int c : {1, 2}) {
                ++out.instances_checked;
                const long long observed = tree_recurrence_restricted_value(t, c);
                const long long predicted = max_pcb_tree(t, c).value;
                if (observed != predicted)
                    out.counterexamples.push_back(
                        {graph_to_string(t), c, observed, predicted,
                         "restricted recurrence vs exact tree optimum"});
            }
        });
    }
}

} // namespace

std::vector<std::string> audit_claim_ids() {
    return {"duality", "gadget", "thm10", "thm10-unguarded", "meis-p2b",
            "tree-recurrence"};
}

AuditReport audit_claims(int max_n, const std::vector<std::string>& claims,
                         uint64_t seed) {
    if (max_n < 1 || max_n > 7)
        throw InvalidInputError("audit supports 1 <= max-n <= 7");
    std::vector<std::string> ids = claims.empty() ? audit_claim_ids() : claims;
    AuditReport report;
    report.max_n = max_n;
    report.seed = seed;
    for (const auto& id : ids) {
        ClaimReport claim;
        claim.claim = id;
        claim.description = claim_description(id); // validates the id
        if (id == "duality")
            audit_duality(claim, max_n, seed);
        else if (id == "gadget")
            audit_gadget(claim, max_n, seed);
        else if (id == "thm10")
            audit_thm10(claim, max_n, seed, /*guarded=*/true);
        else if (id == "thm10-unguarded")
            audit_thm10(claim, max_n, seed, /*guarded=*/false);
        else if (id == "meis-p2b")
            audit_meis_p2b(claim, max_n, seed);
        else if (id == "tree-recurrence")
            audit_tree_recurrence(claim, std::min(max_n, 7));
        report.claims.push_back(std::move(claim));
    }
    return report;
}

std::string audit_to_text(const AuditReport& report) {
    std::ostringstream out;
    out << "audit max-n=" << report.max_n << " seed=" << report.seed << "\n";
    for (const auto& claim : report.claims) {
        out << "\n[" << claim.claim << "] " << claim.description << "\n";
        out << "  checked " << claim.instances_checked << " instances";
        if (claim.instances_skipped > 0)
            out << " (" << claim.instances_skipped << " skipped over caps)";
        out << "\n  verdict: "
            << (claim.confirmed()
                    ? "confirmed"
                    : "counterexamples (" + std::to_string(claim.counterexamples.size()) + ")")
            << "\n";
        for (const auto& cex : claim.counterexamples) {
            out << "  - c=" << cex.c << " observed=" << cex.observed
                << " predicted=" << cex.predicted << " (" << cex.note << ")\n";
            std::istringstream lines(cex.instance);
            std::string line;
            while (std::getline(lines, line)) out << "      " << line << "\n";
        }
    }
    return out.str();
}

std::string audit_to_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    j["max_n"] = report.max_n;
    j["seed"] = report.seed;
    auto claims = nlohmann::ordered_json::array();
    for (const auto& claim : report.claims) {
        nlohmann::ordered_json c;
        c["claim"] = claim.claim;
        c["description"] = claim.description;
        c["instances_checked"] = claim.instances_checked;
        c["instances_skipped"] = claim.instances_skipped;
        c["verdict"] = claim.confirmed() ? "confirmed" : "counterexamples";
        auto cexs = nlohmann::ordered_json::array();
        for (const auto& cex : claim.counterexamples) {
            cexs.push_back({{"instance", cex.instance},
                            {"c", cex.c},
                            {"observed", cex.observed},
                            {"predicted", cex.predicted},
                            {"note", cex.note}});
        }
        c["counterexamples"] = std::move(cexs);
        claims.push_back(std::move(c));
    }
    j["claims"] = std::move(claims);
    return j.dump(2);
}

} // namespace pcb
