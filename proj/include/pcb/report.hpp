#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcb/graph.hpp"
#include "pcb/strings.hpp"

namespace pcb {

/// Uniform solver output. `validity` is always re-derived from the witness
/// by revalidate(), never copied from solver internals.
struct SolveReport {
    std::string problem;                       // "pcb" | "meis"
    std::string method;                        // "brute", "tree-dp", ...
    int c = 0;                                 // degree bound (pcb only)
    int n = 0;                                 // vertices / string count
    int m = 0;                                 // edges / string width
    int value = 0;                             // witness cardinality
    std::vector<Edge> witness_edges;           // pcb witness
    std::vector<std::string> witness_strings;  // meis witness
    std::optional<uint64_t> seed;
    PcbBounds bounds{};
    std::string validity;                      // "ok" | "violation(u,v)" | ...
    double elapsed_ms = 0.0;
};

/// Recomputes `validity` from the witness: the partial-degree check for pcb
/// reports, the expressible-independence check for meis reports. Also
/// refreshes the bounds block from (n, c).
void revalidate(const Graph& g, SolveReport& report);
void revalidate_meis(const StringSet& w, SolveReport& report);

/// One JSON object per report, fields in fixed order (problem, method, c,
/// n, m, value, witness, seed, bounds, validity, elapsed_ms).
std::string report_to_json(const SolveReport& report);

/// Human-readable one-block form.
std::string report_to_text(const SolveReport& report);

} // namespace pcb
