#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "pcb/errors.hpp"
#include "pcb/exact.hpp"
#include "pcb/gen.hpp"
#include "pcb/io.hpp"
#include "pcb/reductions.hpp"
#include "pcb/rng.hpp"

using namespace pcb;
using testing::complete_graph;
using testing::cycle_graph;
using testing::make_graph;
using testing::make_set;
using testing::path_graph;

TEST_CASE("2-regular strings map to edges and back") {
    const Graph g = meis2_to_graph(make_set({"110", "011", "101"}));
    CHECK(graph_to_string(g) == graph_to_string(cycle_graph(3)));

    CHECK_THROWS_AS(meis2_to_graph(make_set({"111"})), InvalidInputError);
    CHECK_THROWS_AS(graph_to_meis2(cycle_graph(3), 2), InvalidInputError);

    SplitMix64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        GenSpec spec;
        spec.kind = GenKind::RandomGraph;
        spec.n = 2 + static_cast<int>(rng.below(5));
        spec.m = 1 + static_cast<int>(rng.below(
                        spec.n * (spec.n - 1) / 2));
        spec.seed = rng.next();
        const Graph g2 = generate_graph(spec);
        CHECK(graph_to_string(meis2_to_graph(graph_to_meis2(g2))) ==
              graph_to_string(g2));
    }

    // wider image: trailing bits become isolated vertices
    const StringSet wide = graph_to_meis2(path_graph(3), 5);
    CHECK(wide.width() == 5);
    CHECK(meis2_to_graph(wide).vertex_count() == 5);
}

TEST_CASE("meis optimum equals packing optimum through the map") {
    const StringSet w = make_set({"1100", "0110", "0011"});
    const int meis = max_meis_bruteforce(w).size;
    const int pcb2 = max_pcb_bruteforce(path_graph(4), 2).value;
    CHECK(meis == 3);
    CHECK(meis == pcb2);
}

TEST_CASE("universal-vertex gadget") {
    const Graph k4 = p1b_to_pcb_gadget(cycle_graph(3), 2);
    CHECK(graph_to_string(k4) == graph_to_string(complete_graph(4)));

    const Graph g = p1b_to_pcb_gadget(path_graph(3), 3);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 2 + 6);
    CHECK(g.degree(3) == 3);
    CHECK(g.degree(4) == 3);

    CHECK_THROWS_AS(p1b_to_pcb_gadget(path_graph(3), 1), InvalidInputError);

    SplitMix64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        GenSpec spec;
        spec.kind = GenKind::RandomGraph;
        spec.n = 2 + static_cast<int>(rng.below(6));
        spec.min_degree = 1;
        spec.m = spec.n;
        spec.seed = rng.next();
        const Graph base = generate_graph(spec);
        for (int c = 2; c <= 4; ++c) {
            const Graph out = p1b_to_pcb_gadget(base, c);
            CHECK(out.vertex_count() - base.vertex_count() == c - 1);
            CHECK(out.edge_count() - base.edge_count() == (c - 1) * base.vertex_count());
        }
    }
}

TEST_CASE("labeled graph enumeration") {
    int all = 0, isolate_free = 0;
    for_each_labeled_graph(3, false, [&](const Graph&) { ++all; });
    for_each_labeled_graph(3, true, [&](const Graph&) { ++isolate_free; });
    CHECK(all == 8);
    CHECK(isolate_free == 4);
    CHECK_THROWS_AS(for_each_labeled_graph(8, true, [](const Graph&) {}),
                    InvalidInputError);
}

TEST_CASE("labeled tree enumeration") {
    int n3 = 0, n4 = 0;
    for_each_labeled_tree(3, [&](const Graph& t) {
        ++n3;
        CHECK(t.edge_count() == 2);
    });
    for_each_labeled_tree(4, [&](const Graph& t) {
        ++n4;
        CHECK(t.edge_count() == 3);
        CHECK(t.is_isolate_free());
    });
    CHECK(n3 == 3);   // 3^1
    CHECK(n4 == 16);  // 4^2
}

TEST_CASE("restricted tree recurrence is sound but incomplete") {
    // rooted at 0, the two-edge path through vertex 1 is exactly the case
    // the restricted recurrence cannot extend
    const Graph chain = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(tree_recurrence_restricted_value(chain, 1) == 1);
    CHECK(max_pcb_tree(chain, 1).value == 2);

    // rooted at the center it gets the optimum
    const Graph fan = make_graph(3, {{0, 1}, {0, 2}});
    CHECK(tree_recurrence_restricted_value(fan, 1) == 2);

    for (int n = 2; n <= 6; ++n)
        for_each_labeled_tree(n, [&](const Graph& t) {
            for (int c = 1; c <= 3; ++c)
                CHECK(tree_recurrence_restricted_value(t, c) <=
                      max_pcb_tree(t, c).value);
        });
}

TEST_CASE("audit confirms the duality and equivalence claims") {
    const AuditReport report = audit_claims(4, {"duality", "meis-p2b", "thm10"});
    REQUIRE(report.claims.size() == 3);
    for (const auto& claim : report.claims) {
        CHECK(claim.confirmed());
        CHECK(claim.instances_checked > 0);
    }
}

TEST_CASE("audit records the known counterexamples with replayable instances") {
    const AuditReport report =
        audit_claims(3, {"gadget", "thm10-unguarded", "tree-recurrence"});

    const ClaimReport& gadget = report.claims[0];
    CHECK(!gadget.confirmed());
    bool found_triangle = false;
    for (const auto& cex : gadget.counterexamples) {
        std::istringstream in(cex.instance);
        const Graph g = load_graph(in);
        // replay both sides from the embedded instance
        const long long observed =
            max_pcb_bruteforce(p1b_to_pcb_gadget(g, cex.c), cex.c).value;
        const long long predicted =
            max_pcb_bruteforce(g, 1).value +
            static_cast<long long>(cex.c - 1) * g.vertex_count();
        CHECK(observed == cex.observed);
        CHECK(predicted == cex.predicted);
        if (graph_to_string(g) == graph_to_string(cycle_graph(3)) && cex.c == 2) {
            found_triangle = true;
            CHECK(cex.observed == 4);
            CHECK(cex.predicted == 5);
        }
    }
    CHECK(found_triangle);

    const ClaimReport& unguarded = report.claims[1];
    CHECK(!unguarded.confirmed());
    bool triangle_bound = false;
    for (const auto& cex : unguarded.counterexamples) {
        std::istringstream in(cex.instance);
        const Graph g = load_graph(in);
        CHECK(max_pcb_bruteforce(g, cex.c).value == cex.observed);
        CHECK(cex.observed > cex.predicted);
        if (graph_to_string(g) == graph_to_string(cycle_graph(3)))
            triangle_bound = cex.observed == 3 && cex.predicted == 2;
    }
    CHECK(triangle_bound);

    const ClaimReport& recurrence = report.claims[2];
    CHECK(!recurrence.confirmed());
    for (const auto& cex : recurrence.counterexamples) {
        std::istringstream in(cex.instance);
        const Graph t = load_graph(in);
        CHECK(tree_recurrence_restricted_value(t, cex.c) == cex.observed);
        CHECK(max_pcb_tree(t, cex.c).value == cex.predicted);
    }
}

TEST_CASE("audit report serialization and validation") {
    const AuditReport report = audit_claims(3, {"duality"});
    const std::string text = audit_to_text(report);
    CHECK(text.find("duality") != std::string::npos);
    CHECK(text.find("confirmed") != std::string::npos);
    const std::string json = audit_to_json(report);
    CHECK(json.find("\"verdict\": \"confirmed\"") != std::string::npos);

    CHECK_THROWS_AS(audit_claims(8), InvalidInputError);
    CHECK_THROWS_AS(audit_claims(3, {"nonsense"}), InvalidInputError);
}
