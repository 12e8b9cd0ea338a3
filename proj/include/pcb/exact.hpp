#pragma once

#include <vector>

#include "pcb/graph.hpp"
#include "pcb/report.hpp"
#include "pcb/strings.hpp"

namespace pcb {

/// Hard enumeration budgets. Exceeding them throws CapExceededError; these
/// are limits, not heuristics that degrade.
inline constexpr int kBruteForceEdgeCap = 22;
inline constexpr int kMeisMemberCap = 16;
inline constexpr int kDominatingVertexCap = 26;

/// Exact maximum partial-c-bounded edge count by pruned subset search over
/// the edge list. The witness is the lexicographically smallest maximum
/// selection. Requires an isolate-free graph with at most edge_cap edges.
SolveReport max_pcb_bruteforce(const Graph& g, int c, int edge_cap = kBruteForceEdgeCap);

/// Exact optimum on a connected tree in O(n*c).
///
/// Bottom-up over a rooting at vertex 0; each vertex combines its children
/// left to right by a knapsack over three child contracts:
///   A(w): no edge to the parent;
///   B(w): edge to the parent, w's final degree stays <= c (edge always
///         legal via w);
///   C(w): edge to the parent, w's final degree exceeds c (edge legal only
///         if the parent keeps final degree <= c).
/// Answer is A(root). Throws InvalidInputError unless the input is a
/// connected tree on >= 2 vertices.
SolveReport max_pcb_tree(const Graph& t, int c);

/// Maximum expressible-independent subset by pruned subset search
/// (independence is hereditary, so supersets of dependent sets are cut).
/// Witness indices are the lexicographically smallest maximum, in input
/// order. Throws CapExceededError when w has more than cap members.
struct MeisResult {
    int size = 0;
    std::vector<int> witness_indices;
};

MeisResult max_meis_bruteforce(const StringSet& w, int cap = kMeisMemberCap);

/// Smallest dominating set, lexicographically smallest among minima.
/// Enumeration over vertex subsets; throws CapExceededError beyond
/// kDominatingVertexCap vertices.
std::vector<int> min_dominating_bruteforce(const Graph& g);

} // namespace pcb
