#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcb/graph.hpp"
#include "pcb/report.hpp"

namespace pcb {

/// Exact dyadic rational num / 2^exp. All probabilities in the bipartition
/// analysis are dyadic, so this covers the conditional-expectation ladder
/// without any rounding.
class Dyadic {
public:
    using Int = boost::multiprecision::cpp_int;

    Dyadic() = default;
    Dyadic(long long value) : num_(value) {} // NOLINT: implicit by design
    static Dyadic ratio(Int numerator, int pow2);

    Dyadic operator+(const Dyadic& rhs) const;
    Dyadic operator-(const Dyadic& rhs) const;
    Dyadic& operator+=(const Dyadic& rhs) { return *this = *this + rhs; }

    std::strong_ordering operator<=>(const Dyadic& rhs) const;
    bool operator==(const Dyadic& rhs) const { return (*this <=> rhs) == 0; }

    const Int& numerator() const { return num_; }
    int exponent() const { return exp_; }
    double to_double() const;
    std::string str() const; // reduced "num/den" (or "num" when integral)

private:
    Int num_;
    int exp_ = 0;

    void normalize();
};

/// Dominating set over a fixed parent graph.
struct DominatingSet {
    const Graph* parent = nullptr;
    std::vector<int> members; // ascending
};

/// Coin-flip bipartition plus the edge selection its greedy pass keeps.
/// Every kept edge has its left endpoint at kept-degree <= 2, so the
/// selection is partial-2-bounded by construction.
struct Bipartition {
    std::vector<char> left; // per vertex, 1 = left side
    EdgeSelection selected;
};

/// Greedy sweep 0..n-1 adding every not-yet-dominated vertex (a maximal
/// independent set); complemented when larger than n/2. Guarantees
/// |members| <= floor(n/2) on isolate-free input. O(|E|).
DominatingSet greedy_min_dominating(const Graph& g);

/// Attaches every vertex outside d to its lowest-index dominator; exactly
/// n - |d| edges, always a star forest.
EdgeSelection ds_to_star_forest(const Graph& g, const DominatingSet& d);

/// Star centers (lower-index endpoint for single-edge stars) plus all
/// vertices untouched by sel; exactly n - |chosen| vertices, always
/// dominating. Requires sel to be a star forest.
DominatingSet star_forest_to_ds(const Graph& g, const EdgeSelection& sel);

/// 2-approximation for maximum partial-1-bounded subgraph: the composition
/// of the two constructions above. Output has >= ceil(n/2) edges and the
/// optimum has at most n-1, hence the ratio.
SolveReport approx_p1b(const Graph& g);

/// Exact per-vertex expectation 1 - (2+d)/2^(d+1) of the kept-degree
/// contribution of a degree-d vertex under the random bipartition. d >= 1.
Dyadic expected_left_degree(int degree);

/// Edges whose smaller parent degree is <= 2. Any selection keeps such an
/// edge legal through that endpoint, whatever else is chosen.
std::vector<Edge> priority_edges(const Graph& g);

/// Random bipartition by independent fair coins from the seed, then a
/// lexicographic pass keeping left-to-right edges while the left endpoint
/// has kept-degree < 2 (plus the edge reaching 2).
Bipartition approx_p2b_randomized(const Graph& g, uint64_t seed);

/// Derandomized bipartition: vertices decided 0..n-1, each placed on the
/// side maximizing the exact conditional expectation of the final kept-edge
/// count (undecided vertices uniform, ties toward left). The result size
/// never falls below the sum of expected_left_degree over all degrees.
Bipartition approx_p2b_derandomized(const Graph& g);

/// Swap-in/swap-out repair: returns a partial-2-bounded superset of the
/// priority edges with cardinality >= |m|. Each missing priority edge is
/// swapped for a non-priority edge at its high-degree endpoint when one is
/// chosen there, otherwise added outright. Requires m to be
/// partial-2-bounded.
EdgeSelection force_priority_edges(const Graph& g, const EdgeSelection& m);

} // namespace pcb
