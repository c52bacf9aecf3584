#pragma once

#include "zagreb/graph.hpp"

#include <string>
#include <string_view>

namespace zagreb {

// Edge list: one edge per line as "u v"; "v:" declares an isolated vertex;
// lines starting with '#' and blank lines are ignored. Tokens are
// whitespace-free. Self-loops, duplicate edges and malformed lines raise
// ParseError with the 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph &g);

// graph6 (the printable 6-bit encoding of the upper adjacency triangle).
// parse accepts an optional ">>graph6<<" header and both the short and the
// 4-byte order forms; emit writes vertices in sorted label order and the
// parsed graph carries canonical integer tokens "0".."n-1".
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

// Undirected DOT document; labels quoted verbatim, vertices and edges in
// sorted order.
std::string emit_dot(const Graph &g);

} // namespace zagreb
