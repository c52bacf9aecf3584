#pragma once

#include "zagreb/graph.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace zagreb {

// Degree of v in g. Throws UnknownVertexError when v is not a vertex.
std::size_t degree(const Graph &g, const VertexLabel &v);

// Every vertex reachable from every other. The empty graph and the
// single-vertex graph count as connected.
bool is_connected(const Graph &g);

std::size_t connected_component_count(const Graph &g);

// Connected with size == order.
bool is_unicyclic(const Graph &g);

// Vertices whose removal increases the number of connected components,
// found by a single DFS over low-links.
std::set<VertexLabel> articulation_points(const Graph &g);

// Degree multiset as a sorted vector.
std::vector<std::size_t> degree_sequence(const Graph &g);

} // namespace zagreb
