#include "pcb/graph.hpp"

#include <algorithm>
#include <utility>

#include "pcb/errors.hpp"

namespace pcb {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw InvalidInputError("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw InvalidInputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw InvalidInputError("edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") out of range for n=" +
                                    std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidInputError("duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::optional<int> Graph::first_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v].empty()) return v;
    return std::nullopt;
}

EdgeSelection::EdgeSelection(const Graph& parent, std::vector<Edge> chosen)
    : parent_(&parent) {
    for (auto& e : chosen)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end())
        throw InvalidInputError("duplicate chosen edge");
    for (const Edge& e : chosen)
        if (!parent.has_edge(e.u, e.v))
            throw InvalidInputError("chosen edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") is not a parent edge");
    chosen_ = std::move(chosen);
    degree_.assign(parent.vertex_count(), 0);
    for (const Edge& e : chosen_) {
        ++degree_[e.u];
        ++degree_[e.v];
    }
}

EdgeSelection EdgeSelection::all_edges(const Graph& parent) {
    return EdgeSelection(parent, parent.edges());
}

EdgeSelection EdgeSelection::empty(const Graph& parent) {
    return EdgeSelection(parent, {});
}

PcbVerdict is_partial_c_bounded(const EdgeSelection& sel, int c) {
    if (c < 1) throw InvalidInputError("c must be >= 1");
    for (const Edge& e : sel.chosen())
        if (sel.degree(e.u) > c && sel.degree(e.v) > c)
            return PcbVerdict{e};
    return PcbVerdict{};
}

bool is_star_forest(const EdgeSelection& sel) {
    // Component scan over the chosen edges: a component is a star iff it is
    // a tree with at most one vertex of chosen-degree > 1.
    const Graph& g = sel.parent();
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : sel.chosen()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack, comp;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || adj[s].empty()) continue;
        comp.clear();
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        long long deg_sum = 0;
        int centers = 0;
        for (int v : comp) {
            deg_sum += static_cast<long long>(adj[v].size());
            if (adj[v].size() > 1) ++centers;
        }
        const long long edges_in_comp = deg_sum / 2;
        if (centers > 1 || edges_in_comp != static_cast<long long>(comp.size()) - 1)
            return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& d) {
    std::vector<char> dominated(g.vertex_count(), 0);
    for (int v : d) {
        if (v < 0 || v >= g.vertex_count())
            throw InvalidInputError("dominating-set vertex out of range");
        dominated[v] = 1;
        for (int w : g.neighbors(v)) dominated[w] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dominated[v]) return false;
    return true;
}

PcbBounds pcb_upper_bounds(int n, int c) {
    if (n < 1) throw InvalidInputError("n must be >= 1");
    if (c < 1) throw InvalidInputError("c must be >= 1");
    PcbBounds b;
    b.charging = static_cast<long long>(c) * n;
    b.paper = static_cast<long long>(c) * (n - c);
    b.paper_applicable = n >= 2 * c + 1;
    return b;
}

} // namespace pcb
