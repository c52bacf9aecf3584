#pragma once

#include "zagreb/graph.hpp"

#include <span>
#include <string>

namespace zagreb {

enum class OperatorId {
    Subdivision,
    LineGraph,
    LineCutVertex,
};

// Replaces each edge {u,v} with a path u - s(u,v) - v. Keeps the original
// vertex labels; |V| grows by |E|, |E| doubles.
Graph subdivision(const Graph &g);

// One EdgeVertex per edge of g; two of them adjacent iff the underlying
// edges share an endpoint. line_graph of the empty graph or K_1 is empty.
Graph line_graph(const Graph &g);

// line_graph(g) plus one CutCopy vertex per articulation point c of g,
// joined to every EdgeVertex whose edge is incident with c. line_graph(g)
// is always a labeled subgraph of the result.
Graph line_cut_vertex_graph(const Graph &g);

// Left-to-right composition; the empty sequence is the identity.
Graph apply_pipeline(const Graph &g, std::span<const OperatorId> ops);

std::string operator_name(OperatorId op);

} // namespace zagreb
