#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "pcb/errors.hpp"
#include "pcb/io.hpp"

using namespace pcb;

namespace {

Graph load(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

StringSet load_set(const std::string& text) {
    std::istringstream in(text);
    return load_strings(in);
}

} // namespace

TEST_CASE("graph files load with comments and normalize on save") {
    const std::string messy =
        "# a square\n"
        "\n"
        "p 4 4\n"
        "e 0 1   # first\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 0 3\n";
    const Graph g = load(messy);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);

    const std::string canonical = graph_to_string(g);
    CHECK(canonical == "p 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n");
    // canonical form is a fixpoint
    CHECK(graph_to_string(load(canonical)) == canonical);
}

TEST_CASE("graph files with zero edges and isolated vertices") {
    const Graph g = load("p 3 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 0);
    CHECK(!g.is_isolate_free());
}

TEST_CASE("graph parse errors") {
    CHECK_THROWS_AS(load(""), ParseError);                          // no p line
    CHECK_THROWS_AS(load("e 0 1\np 2 1\n"), ParseError);            // e before p
    CHECK_THROWS_AS(load("p 2 1\ne 1 0\n"), ParseError);            // u >= v
    CHECK_THROWS_AS(load("p 2 1\ne 0 0\n"), ParseError);            // self loop
    CHECK_THROWS_AS(load("p 2 2\ne 0 1\ne 0 1\n"), ParseError);     // duplicate
    CHECK_THROWS_AS(load("p 2 2\ne 0 1\n"), ParseError);            // count mismatch
    CHECK_THROWS_AS(load("p 2 1\ne 0 2\n"), ParseError);            // out of range
    CHECK_THROWS_AS(load("p 2 1\ne 0 1 9\n"), ParseError);          // trailing token
    CHECK_THROWS_AS(load("p 2 1\nq 0 1\n"), ParseError);            // unknown tag
    CHECK_THROWS_AS(load("p 2 1\np 2 1\ne 0 1\n"), ParseError);     // duplicate p
    CHECK_THROWS_AS(load_graph_file("/nonexistent/x.graph"), ParseError);
}

TEST_CASE("strings files round trip") {
    const StringSet w = load_set("# two bits\n10\n01\n\n11\n");
    CHECK(w.size() == 3);
    CHECK(w.width() == 2);
    CHECK(w.at(0).str() == "10");
    const std::string canonical = strings_to_string(w);
    CHECK(canonical == "10\n01\n11\n");
    CHECK(strings_to_string(load_set(canonical)) == canonical);
}

TEST_CASE("strings parse errors") {
    CHECK_THROWS_AS(load_set("10\n0x\n"), ParseError); // bad character
    CHECK_THROWS_AS(load_set("10\n011\n"), ParseError); // mixed width
    CHECK_THROWS_AS(load_set("10\n10\n"), ParseError);  // duplicate
}
