#pragma once

#include <iosfwd>
#include <string>

#include "pcb/graph.hpp"
#include "pcb/strings.hpp"

namespace pcb {

/// Graph text format:
///   p <n> <m>
///   e <u> <v>        (m lines, 0-based, u < v required)
/// '#' starts a comment; blank lines are ignored. save() writes the
/// canonical form (header, then edges in ascending order), so
/// load -> save -> load is byte-stable.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

/// Strings file: one 0/1 string per line, uniform length, '#' comments.
StringSet load_strings(std::istream& in);
StringSet load_strings_file(const std::string& path);
void save_strings(std::ostream& out, const StringSet& w);
std::string strings_to_string(const StringSet& w);

} // namespace pcb
