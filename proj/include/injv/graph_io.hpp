#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "injv/graph.hpp"

namespace injv {

/// Edge-list text: first non-comment line `n m`, then m lines `u v` (0-based).
/// Lines starting with '#' are ignored.
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6 (n < 258048). An optional leading ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads either format; a single non-numeric token is taken as graph6.
/// An empty input is the graph with no vertices.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

}  // namespace injv
