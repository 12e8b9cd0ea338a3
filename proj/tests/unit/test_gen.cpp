#include <doctest.h>

#include "helpers.hpp"
#include "pcb/errors.hpp"
#include "pcb/gen.hpp"
#include "pcb/graph.hpp"
#include "pcb/io.hpp"
#include "pcb/rng.hpp"

using namespace pcb;

namespace {

GenSpec spec_of(GenKind kind) {
    GenSpec spec;
    spec.kind = kind;
    return spec;
}

} // namespace

TEST_CASE("kind names round trip") {
    for (const char* name :
         {"random-graph", "random-tree", "bipartite-extremal",
          "random-2regular-strings", "path", "cycle", "star", "double-star",
          "complete"})
        CHECK(gen_kind_name(parse_gen_kind(name)) == name);
    CHECK_THROWS_AS(parse_gen_kind("hexagon"), InvalidInputError);
}

TEST_CASE("fixed shapes") {
    GenSpec spec = spec_of(GenKind::Path);
    spec.n = 5;
    CHECK(generate_graph(spec).edge_count() == 4);

    spec.kind = GenKind::Cycle;
    const Graph cycle = generate_graph(spec);
    CHECK(cycle.edge_count() == 5);
    CHECK(cycle.max_degree() == 2);

    spec.kind = GenKind::Star;
    const Graph star = generate_graph(spec);
    CHECK(star.degree(0) == 4);
    CHECK(star.edge_count() == 4);

    spec.kind = GenKind::Complete;
    CHECK(generate_graph(spec).edge_count() == 10);

    CHECK_THROWS_AS(generate_graph(spec_of(GenKind::Path)), InvalidInputError);
}

TEST_CASE("bipartite extremal attains the paper bound with equality") {
    GenSpec spec = spec_of(GenKind::BipartiteExtremal);
    spec.c = 2;
    spec.n = 6;
    const Graph k24 = generate_graph(spec);
    CHECK(k24.vertex_count() == 6);
    CHECK(k24.edge_count() == 8);
    CHECK(is_partial_c_bounded(EdgeSelection::all_edges(k24), 2).ok());

    for (int c = 1; c <= 4; ++c)
        for (int n = 2 * c + 1; n <= 12; ++n) {
            spec.c = c;
            spec.n = n;
            const Graph g = generate_graph(spec);
            CHECK(g.edge_count() == c * (n - c));
            CHECK(is_partial_c_bounded(EdgeSelection::all_edges(g), c).ok());
        }

    spec.c = 3;
    spec.n = 3;
    CHECK_THROWS_AS(generate_graph(spec), InvalidInputError);
}

TEST_CASE("double star is the forbidden pattern") {
    GenSpec spec = spec_of(GenKind::DoubleStar);
    spec.c = 2;
    const Graph h = generate_graph(spec);
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 5);
    CHECK(h.degree(0) == 3);
    CHECK(h.degree(1) == 3);
    CHECK(h.has_edge(0, 1));
    // taking everything violates the bound at the center edge
    CHECK(!is_partial_c_bounded(EdgeSelection::all_edges(h), 2).ok());
}

TEST_CASE("random tree is a tree and deterministic") {
    GenSpec spec = spec_of(GenKind::RandomTree);
    spec.n = 10;
    spec.seed = 1;
    const Graph a = generate_graph(spec);
    const Graph b = generate_graph(spec);
    CHECK(graph_to_string(a) == graph_to_string(b));
    CHECK(a.edge_count() == 9);
    CHECK(a.is_isolate_free());

    spec.seed = 2;
    CHECK(graph_to_string(generate_graph(spec)) != graph_to_string(a));

    SplitMix64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        spec.n = 2 + static_cast<int>(rng.below(40));
        spec.seed = rng.next();
        const Graph t = generate_graph(spec);
        CHECK(t.edge_count() == t.vertex_count() - 1);
        CHECK(t.is_isolate_free());
    }
}

TEST_CASE("random graph honors edge count and minimum degree") {
    GenSpec spec = spec_of(GenKind::RandomGraph);
    spec.n = 9;
    spec.m = 14;
    spec.seed = 5;
    const Graph a = generate_graph(spec);
    CHECK(a.edge_count() == 14);
    CHECK(graph_to_string(a) == graph_to_string(generate_graph(spec)));

    spec.min_degree = 3;
    const Graph b = generate_graph(spec);
    CHECK(b.edge_count() >= 14);
    for (int v = 0; v < b.vertex_count(); ++v) CHECK(b.degree(v) >= 3);

    spec.min_degree = 9;
    CHECK_THROWS_AS(generate_graph(spec), InvalidInputError);
    spec.min_degree = 0;
    spec.m = 37; // over C(9,2) = 36
    CHECK_THROWS_AS(generate_graph(spec), InvalidInputError);
}

TEST_CASE("random 2-regular strings") {
    GenSpec spec = spec_of(GenKind::Random2RegularStrings);
    spec.width = 6;
    spec.count = 9;
    spec.seed = 3;
    const StringSet w = generate_strings(spec);
    CHECK(w.size() == 9);
    CHECK(w.width() == 6);
    CHECK(w.is_c_regular(2));
    CHECK(strings_to_string(w) == strings_to_string(generate_strings(spec)));

    spec.count = 16; // over C(6,2) = 15
    CHECK_THROWS_AS(generate_strings(spec), InvalidInputError);

    CHECK_THROWS_AS(generate_strings(spec_of(GenKind::RandomTree)), InvalidInputError);
    CHECK_THROWS_AS(generate_graph(spec), InvalidInputError);
}
