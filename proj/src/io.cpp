#include "pcb/io.hpp"

#include <fstream>
#include <sstream>

#include "pcb/errors.hpp"

namespace pcb {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

} // namespace

Graph load_graph(std::istream& in) {
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate p line");
            if (!(ss >> n >> m) || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad p line");
        } else if (tag == "e") {
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": e before p");
            int u, v;
            if (!(ss >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": bad e line");
            if (u >= v)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": edge endpoints must satisfy u < v");
            edges.push_back(Edge{u, v});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
        std::string rest;
        if (ss >> rest)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0) throw ParseError("missing p line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("p line announces " + std::to_string(m) + " edges, file has " +
                         std::to_string(edges.size()));
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidInputError& e) {
        throw ParseError(e.what());
    }
}

Graph load_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_graph(in);
}

void save_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    save_graph(out, g);
    return out.str();
}

StringSet load_strings(std::istream& in) {
    std::vector<BitString> members;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        try {
            members.push_back(BitString::parse(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    try {
        return StringSet(std::move(members));
    } catch (const InvalidInputError& e) {
        throw ParseError(e.what());
    }
}

StringSet load_strings_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_strings(in);
}

void save_strings(std::ostream& out, const StringSet& w) {
    for (const auto& s : w.members()) out << s.str() << "\n";
}

std::string strings_to_string(const StringSet& w) {
    std::ostringstream out;
    save_strings(out, w);
    return out.str();
}

} // namespace pcb
