#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace pcb {

/// Undirected edge, always stored with u < v. Ordering is lexicographic,
/// which fixes every tie-break in the library.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over dense 0-based vertex ids.
///
/// Immutable after construction and safe for concurrent reads. The container
/// may hold isolated vertices (gadget construction needs to stage them);
/// solvers reject them at entry.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidInputError on self-loops, duplicate edges or ids
    /// outside [0, n). Edges may be given in either orientation; they are
    /// normalized to u < v and sorted.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    std::optional<int> first_isolated_vertex() const;
    bool is_isolate_free() const { return !first_isolated_vertex().has_value(); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// A subset of a parent graph's edges plus the induced degree table.
/// Immutable after construction; the parent must outlive the selection.
class EdgeSelection {
public:
    /// Throws InvalidInputError if a chosen edge is not a parent edge or
    /// appears twice.
    EdgeSelection(const Graph& parent, std::vector<Edge> chosen);

    static EdgeSelection all_edges(const Graph& parent);
    static EdgeSelection empty(const Graph& parent);

    const Graph& parent() const { return *parent_; }
    const std::vector<Edge>& chosen() const { return chosen_; }
    int size() const { return static_cast<int>(chosen_.size()); }

    /// Degree of v counting chosen edges only.
    int degree(int v) const { return degree_.at(v); }
    const std::vector<int>& degrees() const { return degree_; }

private:
    const Graph* parent_ = nullptr;
    std::vector<Edge> chosen_;
    std::vector<int> degree_;
};

/// Outcome of a partial-degree check: ok, or the lexicographically smallest
/// violating edge.
struct PcbVerdict {
    std::optional<Edge> violation;

    bool ok() const { return !violation.has_value(); }
    explicit operator bool() const { return ok(); }
};

/// True iff every chosen edge has at least one endpoint whose chosen-degree
/// is <= c. One pass over the chosen edges; c >= 1.
PcbVerdict is_partial_c_bounded(const EdgeSelection& sel, int c);

/// True iff the chosen edges form vertex-disjoint stars. Decided
/// structurally (component scan), which makes it an independent route to
/// is_partial_c_bounded(sel, 1).
bool is_star_forest(const EdgeSelection& sel);

/// True iff every vertex outside d has a neighbor in d. Vertices listed in
/// d dominate themselves; out-of-range ids throw.
bool is_dominating_set(const Graph& g, const std::vector<int>& d);

/// Edge-count upper bounds for partial-c-bounded graphs on n vertices.
struct PcbBounds {
    long long charging = 0;       // c*n, valid unconditionally
    long long paper = 0;          // c*(n-c), valid only when n >= 2c+1
    bool paper_applicable = false;
};

PcbBounds pcb_upper_bounds(int n, int c);

} // namespace pcb
