#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "pcb/approx.hpp"
#include "pcb/errors.hpp"
#include "pcb/exact.hpp"
#include "pcb/gen.hpp"
#include "pcb/graph.hpp"
#include "pcb/io.hpp"
#include "pcb/reductions.hpp"
#include "pcb/report.hpp"
#include "pcb/strings.hpp"

namespace py = pybind11;

namespace {

std::vector<pcb::Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<pcb::Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back(pcb::Edge{u, v});
    return edges;
}

std::vector<std::pair<int, int>> from_edges(const std::vector<pcb::Edge>& edges) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
    return pairs;
}

pcb::StringSet to_set(const std::vector<std::string>& strings) {
    std::vector<pcb::BitString> members;
    members.reserve(strings.size());
    for (const auto& s : strings) members.push_back(pcb::BitString::parse(s));
    return pcb::StringSet(std::move(members));
}

std::vector<std::string> from_set(const pcb::StringSet& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (const auto& s : w.members()) out.push_back(s.str());
    return out;
}

py::dict report_dict(const pcb::SolveReport& r) {
    py::dict d;
    d["problem"] = r.problem;
    d["method"] = r.method;
    if (r.problem == "pcb") d["c"] = r.c;
    d["n"] = r.n;
    d["m"] = r.m;
    d["value"] = r.value;
    if (r.problem == "meis")
        d["witness"] = r.witness_strings;
    else
        d["witness"] = from_edges(r.witness_edges);
    if (r.seed) d["seed"] = *r.seed;
    if (r.problem == "pcb") {
        py::dict b;
        b["charging"] = r.bounds.charging;
        b["paper"] = r.bounds.paper;
        b["paper_bound_applicable"] = r.bounds.paper_applicable;
        d["bounds"] = b;
    }
    d["validity"] = r.validity;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "partial degree bounded edge packing: solvers, reductions, audits";

    py::register_exception<pcb::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<pcb::InvalidInputError>(m, "InvalidInputError",
                                                   PyExc_ValueError);
    py::register_exception<pcb::CapExceededError>(m, "CapExceededError",
                                                  PyExc_RuntimeError);

    py::class_<pcb::Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return pcb::Graph(n, to_edges(edges));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &pcb::Graph::vertex_count)
        .def_property_readonly("m", &pcb::Graph::edge_count)
        .def_property_readonly("edges",
                               [](const pcb::Graph& g) { return from_edges(g.edges()); })
        .def("degree", &pcb::Graph::degree, py::arg("v"))
        .def("neighbors", &pcb::Graph::neighbors, py::arg("v"))
        .def("__repr__", [](const pcb::Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return out.str();
        });

    m.def("parse_graph", [](const std::string& text) {
        std::istringstream in(text);
        return pcb::load_graph(in);
    });
    m.def("graph_text", [](const pcb::Graph& g) { return pcb::graph_to_string(g); });

    m.def(
        "is_partial_c_bounded",
        [](const pcb::Graph& g, const std::vector<std::pair<int, int>>& chosen,
           int c) -> std::optional<std::pair<int, int>> {
            const pcb::EdgeSelection sel(g, to_edges(chosen));
            const pcb::PcbVerdict v = pcb::is_partial_c_bounded(sel, c);
            if (v.ok()) return std::nullopt;
            return std::make_pair(v.violation->u, v.violation->v);
        },
        py::arg("graph"), py::arg("chosen"), py::arg("c"),
        "None when the selection is partial-c-bounded, else the smallest "
        "violating edge");

    m.def("is_star_forest",
          [](const pcb::Graph& g, const std::vector<std::pair<int, int>>& chosen) {
              return pcb::is_star_forest(pcb::EdgeSelection(g, to_edges(chosen)));
          });
    m.def("is_dominating_set", &pcb::is_dominating_set, py::arg("graph"),
          py::arg("vertices"));
    m.def("pcb_upper_bounds", [](int n, int c) {
        const pcb::PcbBounds b = pcb::pcb_upper_bounds(n, c);
        return py::make_tuple(b.charging, b.paper, b.paper_applicable);
    });

    m.def("solve_brute",
          [](const pcb::Graph& g, int c) { return report_dict(pcb::max_pcb_bruteforce(g, c)); });
    m.def("solve_tree",
          [](const pcb::Graph& g, int c) { return report_dict(pcb::max_pcb_tree(g, c)); });
    m.def("approx_p1b", [](const pcb::Graph& g) { return report_dict(pcb::approx_p1b(g)); });
    m.def("greedy_min_dominating",
          [](const pcb::Graph& g) { return pcb::greedy_min_dominating(g).members; });
    m.def("approx_p2b_randomized", [](const pcb::Graph& g, uint64_t seed) {
        const pcb::Bipartition bp = pcb::approx_p2b_randomized(g, seed);
        return from_edges(bp.selected.chosen());
    });
    m.def("approx_p2b_derandomized", [](const pcb::Graph& g) {
        const pcb::Bipartition bp = pcb::approx_p2b_derandomized(g);
        return from_edges(bp.selected.chosen());
    });
    m.def("expected_left_degree",
          [](int degree) { return pcb::expected_left_degree(degree).str(); });
    m.def("priority_edges",
          [](const pcb::Graph& g) { return from_edges(pcb::priority_edges(g)); });
    m.def("force_priority_edges",
          [](const pcb::Graph& g, const std::vector<std::pair<int, int>>& chosen) {
              const pcb::EdgeSelection out =
                  pcb::force_priority_edges(g, pcb::EdgeSelection(g, to_edges(chosen)));
              return from_edges(out.chosen());
          });

    m.def("is_expressible", [](const std::vector<std::string>& w, const std::string& s) {
        return pcb::is_expressible(to_set(w), pcb::BitString::parse(s));
    });
    m.def("find_formula",
          [](const std::vector<std::string>& w,
             const std::string& s) -> std::optional<std::string> {
              const auto f = pcb::find_formula(to_set(w), pcb::BitString::parse(s));
              if (!f) return std::nullopt;
              return f->str();
          });
    m.def("is_expressible_2regular",
          [](const std::vector<std::string>& w, const std::string& x) {
              return pcb::is_expressible_2regular(to_set(w), pcb::BitString::parse(x));
          });
    m.def("is_expressible_independent",
          [](const std::vector<std::string>& w)
              -> std::optional<std::pair<int, std::string>> {
              const pcb::EiVerdict v = pcb::is_expressible_independent(to_set(w));
              if (v.ok) return std::nullopt;
              return std::make_pair(v.member_index, v.witness->str());
          });
    m.def("closure", [](const std::vector<std::string>& w, int cap) {
        return from_set(pcb::closure(to_set(w), cap));
    }, py::arg("w"), py::arg("cap") = 1 << 16);
    m.def("solve_meis", [](const std::vector<std::string>& w) {
        const pcb::MeisResult r = pcb::max_meis_bruteforce(to_set(w));
        return py::make_tuple(r.size, r.witness_indices);
    });

    m.def("strings_to_graph", [](const std::vector<std::string>& w) {
        return pcb::meis2_to_graph(to_set(w));
    });
    m.def("graph_to_strings",
          [](const pcb::Graph& g) { return from_set(pcb::graph_to_meis2(g)); });
    m.def("p1b_to_pcb_gadget", &pcb::p1b_to_pcb_gadget, py::arg("graph"), py::arg("c"));
    m.def("min_dominating_bruteforce", &pcb::min_dominating_bruteforce);

    m.def(
        "generate",
        [](const std::string& kind, int n, int m, int min_degree, int c, int width,
           int count, uint64_t seed) -> py::object {
            pcb::GenSpec spec;
            spec.kind = pcb::parse_gen_kind(kind);
            spec.n = n;
            spec.m = m;
            spec.min_degree = min_degree;
            spec.c = c;
            spec.width = width;
            spec.count = count;
            spec.seed = seed;
            auto out = pcb::generate(spec);
            if (auto* g = std::get_if<pcb::Graph>(&out)) return py::cast(std::move(*g));
            return py::cast(from_set(std::get<pcb::StringSet>(out)));
        },
        py::arg("kind"), py::arg("n") = 0, py::arg("m") = -1, py::arg("min_degree") = 0,
        py::arg("c") = 1, py::arg("width") = 0, py::arg("count") = 0, py::arg("seed") = 0);

    m.def("audit_claims", [](int max_n, const std::vector<std::string>& claims,
                             uint64_t seed) {
        return pcb::audit_to_json(pcb::audit_claims(max_n, claims, seed));
    }, py::arg("max_n") = 5, py::arg("claims") = std::vector<std::string>{},
       py::arg("seed") = 1);
}
