#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// recompute everything from first principles (flat enumeration, direct
// degree counting) so they stay decoupled from the library code they check.

#include <algorithm>
#include <string>
#include <vector>

#include "pcb/graph.hpp"
#include "pcb/rng.hpp"
#include "pcb/strings.hpp"

namespace testing {

inline pcb::Graph make_graph(int n, std::vector<std::pair<int, int>> pairs) {
    std::vector<pcb::Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back(pcb::Edge{u, v});
    return pcb::Graph(n, std::move(edges));
}

inline pcb::Graph path_graph(int n) {
    std::vector<pcb::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back(pcb::Edge{v, v + 1});
    return pcb::Graph(n, std::move(edges));
}

inline pcb::Graph cycle_graph(int n) {
    std::vector<pcb::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back(pcb::Edge{v, v + 1});
    edges.push_back(pcb::Edge{0, n - 1});
    return pcb::Graph(n, std::move(edges));
}

inline pcb::Graph star_graph(int n) {
    std::vector<pcb::Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(pcb::Edge{0, v});
    return pcb::Graph(n, std::move(edges));
}

inline pcb::Graph complete_graph(int n) {
    std::vector<pcb::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back(pcb::Edge{u, v});
    return pcb::Graph(n, std::move(edges));
}

inline pcb::StringSet make_set(const std::vector<std::string>& strings) {
    std::vector<pcb::BitString> members;
    for (const auto& s : strings) members.push_back(pcb::BitString::parse(s));
    return pcb::StringSet(std::move(members));
}

// Flat-enumeration oracle for the maximum partial-c-bounded subgraph: every
// edge mask, degrees counted directly, best tracked by (size, lexicographic
// edge list). Exponential and proud of it.
struct FlatPcbResult {
    int value = 0;
    std::vector<pcb::Edge> witness;
};

inline FlatPcbResult flat_max_pcb(const pcb::Graph& g, int c) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    FlatPcbResult best;
    best.value = -1;
    std::vector<int> degree(g.vertex_count());
    std::vector<pcb::Edge> chosen;
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        std::fill(degree.begin(), degree.end(), 0);
        chosen.clear();
        for (int b = 0; b < m; ++b)
            if (mask >> b & 1) {
                chosen.push_back(edges[b]);
                ++degree[edges[b].u];
                ++degree[edges[b].v];
            }
        bool valid = true;
        for (const pcb::Edge& e : chosen)
            if (degree[e.u] > c && degree[e.v] > c) {
                valid = false;
                break;
            }
        if (!valid) continue;
        const int size = static_cast<int>(chosen.size());
        if (size > best.value || (size == best.value && chosen < best.witness)) {
            best.value = size;
            best.witness = chosen;
        }
    }
    return best;
}

// Direct kept-count for a fixed side assignment: sum over left vertices of
// min(2, right neighbors). Mirrors the expectation analysis, not the
// implementation's scanning pass.
inline int kept_count_oracle(const pcb::Graph& g, uint32_t left_mask) {
    int total = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!(left_mask >> u & 1)) continue;
        int right = 0;
        for (int w : g.neighbors(u))
            if (!(left_mask >> w & 1)) ++right;
        total += std::min(2, right);
    }
    return total;
}

} // namespace testing
