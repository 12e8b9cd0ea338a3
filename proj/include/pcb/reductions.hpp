#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pcb/graph.hpp"
#include "pcb/strings.hpp"

namespace pcb {

/// 2-regular strings over m bits <-> edges on m vertices: bit i maps to
/// vertex i-1. Round trips are exact; non-2-regular members throw.
Graph meis2_to_graph(const StringSet& w);
StringSet graph_to_meis2(const Graph& g);            // width = vertex count
StringSet graph_to_meis2(const Graph& g, int width); // width >= vertex count

/// Adds c-1 new vertices, each adjacent to every original vertex: exactly
/// c-1 vertices and (c-1)*n edges added. Requires c >= 2.
Graph p1b_to_pcb_gadget(const Graph& g, int c);

/// Value of the restricted tree recurrence that only ever extends
/// child states with fewer than c or more than c chosen neighbors (never
/// the exactly-c state) by a parent edge. Kept solely as an audit
/// reference; the exact solver is max_pcb_tree.
int tree_recurrence_restricted_value(const Graph& t, int c);

/// Calls fn for every labeled graph on n vertices (edge-mask enumeration,
/// 2^(n(n-1)/2) graphs). With isolate_free_only, graphs with isolated
/// vertices are skipped. n <= 7.
void for_each_labeled_graph(int n, bool isolate_free_only,
                            const std::function<void(const Graph&)>& fn);

/// Calls fn for every labeled tree on n vertices (Pruefer enumeration,
/// n^(n-2) trees). n <= 8.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn);

/// One recorded discrepancy: a self-contained instance (canonical graph or
/// strings text) plus the observed and predicted values, replayable by
/// re-running the underlying brute forces.
struct AuditCounterexample {
    std::string instance;
    int c = 0;
    long long observed = 0;
    long long predicted = 0;
    std::string note;
};

struct ClaimReport {
    std::string claim;
    std::string description;
    long long instances_checked = 0;
    long long instances_skipped = 0; // over an enumeration cap, counted not audited
    std::vector<AuditCounterexample> counterexamples;

    bool confirmed() const { return counterexamples.empty(); }
};

struct AuditReport {
    int max_n = 0;
    uint64_t seed = 0;
    std::vector<ClaimReport> claims;
};

/// Known claim ids, in report order:
///   duality          opt_p1b(g) = n - gamma(g)
///   gadget           opt_pcb(gadget(g,c)) = opt_p1b(g) + (c-1)*n
///   thm10            pcb optima on n >= 2c+1 vertices stay within c*(n-c)
///   thm10-unguarded  same bound with the n >= 2c+1 guard dropped (c=2)
///   meis-p2b         meis optimum = p2b optimum under the 2-regular map
///   tree-recurrence  restricted tree recurrence matches the exact optimum
std::vector<std::string> audit_claim_ids();

/// Runs the selected claims (all when empty) on exhaustively enumerated
/// graphs up to n=5 and seeded samples for 6 <= n <= max_n. max_n <= 7.
AuditReport audit_claims(int max_n, const std::vector<std::string>& claims = {},
                         uint64_t seed = 1);

std::string audit_to_text(const AuditReport& report);
std::string audit_to_json(const AuditReport& report);

} // namespace pcb
