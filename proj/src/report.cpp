#include "pcb/report.hpp"

#include <sstream>

#include <json.hpp>

#include "pcb/errors.hpp"

namespace pcb {

void revalidate(const Graph& g, SolveReport& report) {
    report.value = static_cast<int>(report.witness_edges.size());
    report.bounds = pcb_upper_bounds(g.vertex_count(), report.c);
    EdgeSelection sel(g, report.witness_edges);
    const PcbVerdict verdict = is_partial_c_bounded(sel, report.c);
    if (verdict.ok())
        report.validity = "ok";
    else
        report.validity = "violation(" + std::to_string(verdict.violation->u) + "," +
                          std::to_string(verdict.violation->v) + ")";
}

void revalidate_meis(const StringSet& w, SolveReport& report) {
    report.value = static_cast<int>(report.witness_strings.size());
    std::vector<BitString> members;
    members.reserve(report.witness_strings.size());
    for (const auto& s : report.witness_strings) members.push_back(BitString::parse(s));
    const EiVerdict verdict = is_expressible_independent(StringSet(std::move(members)));
    if (verdict.ok)
        report.validity = "ok";
    else
        report.validity = "expressible(" + report.witness_strings[verdict.member_index] + ")";
}

namespace {

nlohmann::ordered_json report_json(const SolveReport& r) {
    nlohmann::ordered_json j;
    j["problem"] = r.problem;
    j["method"] = r.method;
    if (r.problem == "pcb") j["c"] = r.c;
    j["n"] = r.n;
    j["m"] = r.m;
    j["value"] = r.value;
    if (r.problem == "meis") {
        j["witness"] = r.witness_strings;
    } else {
        auto edges = nlohmann::ordered_json::array();
        for (const Edge& e : r.witness_edges) edges.push_back({e.u, e.v});
        j["witness"] = std::move(edges);
    }
    if (r.seed) j["seed"] = *r.seed;
    if (r.problem == "pcb") {
        j["bounds"] = {{"charging", r.bounds.charging},
                       {"paper", r.bounds.paper},
                       {"paper_bound_applicable", r.bounds.paper_applicable}};
    }
    j["validity"] = r.validity;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace

std::string report_to_json(const SolveReport& report) {
    return report_json(report).dump();
}

std::string report_to_text(const SolveReport& report) {
    std::ostringstream out;
    out << "problem:  " << report.problem << "\n"
        << "method:   " << report.method << "\n";
    if (report.problem == "pcb") out << "c:        " << report.c << "\n";
    out << "n:        " << report.n << "\n"
        << "m:        " << report.m << "\n"
        << "value:    " << report.value << "\n";
    out << "witness: ";
    if (report.problem == "meis") {
        for (const auto& s : report.witness_strings) out << " " << s;
    } else {
        for (const Edge& e : report.witness_edges) out << " (" << e.u << "," << e.v << ")";
    }
    out << "\n";
    if (report.seed) out << "seed:     " << *report.seed << "\n";
    if (report.problem == "pcb") {
        out << "bounds:   charging=" << report.bounds.charging
            << " paper=" << report.bounds.paper
            << (report.bounds.paper_applicable ? " (applicable)" : " (n < 2c+1)") << "\n";
    }
    out << "validity: " << report.validity << "\n"
        << "elapsed:  " << report.elapsed_ms << " ms\n";
    return out.str();
}

} // namespace pcb
