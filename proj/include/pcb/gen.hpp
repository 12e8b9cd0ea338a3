#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "pcb/graph.hpp"
#include "pcb/strings.hpp"

namespace pcb {

enum class GenKind {
    RandomGraph,
    RandomTree,
    BipartiteExtremal,
    Random2RegularStrings,
    Path,
    Cycle,
    Star,
    DoubleStar,
    Complete,
};

GenKind parse_gen_kind(const std::string& name);
std::string gen_kind_name(GenKind kind);

/// Deterministic instance description: identical spec, identical instance.
/// All randomness flows from the seed through SplitMix64.
struct GenSpec {
    GenKind kind = GenKind::RandomGraph;
    int n = 0;          // vertex count (graph kinds)
    int m = -1;         // edge count; -1 lets random-graph pick min(2n, max)
    int min_degree = 0; // random-graph: enforced by augmentation
    int c = 1;          // bipartite-extremal / double-star parameter
    int width = 0;      // string kinds
    int count = 0;      // string kinds
    uint64_t seed = 0;
};

/// Generates the instance. Parameter ranges are validated per kind;
/// infeasible parameters throw InvalidInputError.
///
/// random-graph samples m distinct edges, then adds edges at vertices
/// below min_degree until the request is met. random-tree decodes a random
/// Pruefer sequence. bipartite-extremal(c, n) is the complete bipartite
/// K_{c,n-c}, which meets the c*(n-c) edge bound with equality.
/// double-star(c) is two adjacent centers of degree c+1 with c leaves each.
std::variant<Graph, StringSet> generate(const GenSpec& spec);

/// Kind-checked conveniences.
Graph generate_graph(const GenSpec& spec);
StringSet generate_strings(const GenSpec& spec);

} // namespace pcb
