#include "pcb/gen.hpp"

#include <algorithm>

#include "pcb/errors.hpp"
#include "pcb/rng.hpp"

namespace pcb {

GenKind parse_gen_kind(const std::string& name) {
    if (name == "random-graph") return GenKind::RandomGraph;
    if (name == "random-tree") return GenKind::RandomTree;
    if (name == "bipartite-extremal") return GenKind::BipartiteExtremal;
    if (name == "random-2regular-strings") return GenKind::Random2RegularStrings;
    if (name == "path") return GenKind::Path;
    if (name == "cycle") return GenKind::Cycle;
    if (name == "star") return GenKind::Star;
    if (name == "double-star") return GenKind::DoubleStar;
    if (name == "complete") return GenKind::Complete;
    throw InvalidInputError("unknown generator kind '" + name + "'");
}

std::string gen_kind_name(GenKind kind) {
    switch (kind) {
    case GenKind::RandomGraph: return "random-graph";
    case GenKind::RandomTree: return "random-tree";
    case GenKind::BipartiteExtremal: return "bipartite-extremal";
    case GenKind::Random2RegularStrings: return "random-2regular-strings";
    case GenKind::Path: return "path";
    case GenKind::Cycle: return "cycle";
    case GenKind::Star: return "star";
    case GenKind::DoubleStar: return "double-star";
    case GenKind::Complete: return "complete";
    }
    throw Error("unreachable");
}

namespace {

void require_n(const GenSpec& spec, int at_least) {
    if (spec.n < at_least)
        throw InvalidInputError(gen_kind_name(spec.kind) + " needs n >= " +
                                std::to_string(at_least));
}

long long max_edges(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// All C(n,2) edges in lexicographic order.
std::vector<Edge> all_edges(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(max_edges(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    return edges;
}

// m distinct edges via a partial Fisher-Yates shuffle.
std::vector<Edge> sample_edges(int n, int m, SplitMix64& rng) {
    std::vector<Edge> pool = all_edges(n);
    for (int i = 0; i < m; ++i) {
        const size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return pool;
}

Graph gen_random_graph(const GenSpec& spec) {
    require_n(spec, 2);
    if (spec.min_degree >= spec.n)
        throw InvalidInputError("min-degree must be below n");
    const long long cap = max_edges(spec.n);
    long long m = spec.m >= 0 ? spec.m : std::min<long long>(2 * spec.n, cap);
    if (m > cap)
        throw InvalidInputError("m exceeds the " + std::to_string(cap) +
                                " possible edges");
    SplitMix64 rng(spec.seed);
    std::vector<Edge> edges = sample_edges(spec.n, static_cast<int>(m), rng);

    // Augment vertices that fell short of the degree request.
    std::vector<std::vector<char>> adj(spec.n, std::vector<char>(spec.n, 0));
    std::vector<int> degree(spec.n, 0);
    for (const Edge& e : edges) {
        adj[e.u][e.v] = adj[e.v][e.u] = 1;
        ++degree[e.u];
        ++degree[e.v];
    }
    for (int v = 0; v < spec.n; ++v) {
        while (degree[v] < spec.min_degree) {
            std::vector<int> candidates;
            for (int u = 0; u < spec.n; ++u)
                if (u != v && !adj[v][u]) candidates.push_back(u);
            const int u = candidates[rng.below(candidates.size())];
            adj[v][u] = adj[u][v] = 1;
            ++degree[v];
            ++degree[u];
            edges.push_back(Edge{std::min(u, v), std::max(u, v)});
        }
    }
    return Graph(spec.n, std::move(edges));
}

Graph gen_random_tree(const GenSpec& spec) {
    require_n(spec, 2);
    const int n = spec.n;
    SplitMix64 rng(spec.seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(rng.below(n));

    // Pruefer decode, linear-time pointer walk.
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
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
    return Graph(n, std::move(edges));
}

Graph gen_bipartite_extremal(const GenSpec& spec) {
    if (spec.c < 1) throw InvalidInputError("bipartite-extremal needs c >= 1");
    if (spec.n <= spec.c)
        throw InvalidInputError("bipartite-extremal needs n > c");
    std::vector<Edge> edges;
    for (int u = 0; u < spec.c; ++u)
        for (int v = spec.c; v < spec.n; ++v) edges.push_back(Edge{u, v});
    return Graph(spec.n, std::move(edges));
}

Graph gen_path(const GenSpec& spec) {
    require_n(spec, 2);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < spec.n; ++v) edges.push_back(Edge{v, v + 1});
    return Graph(spec.n, std::move(edges));
}

Graph gen_cycle(const GenSpec& spec) {
    require_n(spec, 3);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < spec.n; ++v) edges.push_back(Edge{v, v + 1});
    edges.push_back(Edge{0, spec.n - 1});
    return Graph(spec.n, std::move(edges));
}

Graph gen_star(const GenSpec& spec) {
    require_n(spec, 2);
    std::vector<Edge> edges;
    for (int v = 1; v < spec.n; ++v) edges.push_back(Edge{0, v});
    return Graph(spec.n, std::move(edges));
}

Graph gen_double_star(const GenSpec& spec) {
    if (spec.c < 1) throw InvalidInputError("double-star needs c >= 1");
    const int c = spec.c;
    std::vector<Edge> edges;
    edges.push_back(Edge{0, 1});
    for (int i = 0; i < c; ++i) {
        edges.push_back(Edge{0, 2 + i});
        edges.push_back(Edge{1, 2 + c + i});
    }
    return Graph(2 * c + 2, std::move(edges));
}

Graph gen_complete(const GenSpec& spec) {
    require_n(spec, 2);
    return Graph(spec.n, all_edges(spec.n));
}

StringSet gen_random_2regular_strings(const GenSpec& spec) {
    if (spec.width < 2) throw InvalidInputError("strings need width >= 2");
    if (spec.count < 1) throw InvalidInputError("strings need count >= 1");
    if (spec.count > max_edges(spec.width))
        throw InvalidInputError("count exceeds the distinct 2-regular strings");
    SplitMix64 rng(spec.seed);
    std::vector<Edge> picks = sample_edges(spec.width, spec.count, rng);
    std::vector<BitString> members;
    members.reserve(picks.size());
    for (const Edge& e : picks) {
        BitString s(spec.width);
        s.set(e.u + 1, true);
        s.set(e.v + 1, true);
        members.push_back(std::move(s));
    }
    return StringSet(std::move(members));
}

} // namespace

std::variant<Graph, StringSet> generate(const GenSpec& spec) {
    switch (spec.kind) {
    case GenKind::RandomGraph: return gen_random_graph(spec);
    case GenKind::RandomTree: return gen_random_tree(spec);
    case GenKind::BipartiteExtremal: return gen_bipartite_extremal(spec);
    case GenKind::Random2RegularStrings: return gen_random_2regular_strings(spec);
    case GenKind::Path: return gen_path(spec);
    case GenKind::Cycle: return gen_cycle(spec);
    case GenKind::Star: return gen_star(spec);
    case GenKind::DoubleStar: return gen_double_star(spec);
    case GenKind::Complete: return gen_complete(spec);
    }
    throw Error("unreachable");
}

Graph generate_graph(const GenSpec& spec) {
    auto out = generate(spec);
    if (auto* g = std::get_if<Graph>(&out)) return std::move(*g);
    throw InvalidInputError(gen_kind_name(spec.kind) + " generates strings, not a graph");
}

StringSet generate_strings(const GenSpec& spec) {
    auto out = generate(spec);
    if (auto* w = std::get_if<StringSet>(&out)) return std::move(*w);
    throw InvalidInputError(gen_kind_name(spec.kind) + " generates a graph, not strings");
}

} // namespace pcb
