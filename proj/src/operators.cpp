#include "zagreb/operators.hpp"

#include "zagreb/graph_algorithms.hpp"

#include <vector>

namespace zagreb {

Graph subdivision(const Graph &g) {
    GraphBuilder b;
    for (const VertexLabel &v : g.vertices()) {
        b.add_vertex(v);
    }
    for (const auto &[u, v] : g.edges()) {
        VertexLabel mid = VertexLabel::subdivision_of(u.token(), v.token());
        b.add_edge(u, mid);
        b.add_edge(mid, v);
    }
    return b.build();
}

namespace {

VertexLabel edge_label(const std::pair<VertexLabel, VertexLabel> &e) {
    return VertexLabel::edge_vertex(e.first.token(), e.second.token());
}

// Shared core of L(G) and L_c(G): EdgeVertex per edge, adjacency between
// edges meeting at a vertex (two distinct edges of a simple graph share at
// most one endpoint, so each pair is generated once).
void build_line_part(const Graph &g, GraphBuilder &b) {
    for (const auto &e : g.edges()) {
        b.add_vertex(edge_label(e));
    }
    for (const VertexLabel &v : g.vertices()) {
        std::vector<VertexLabel> incident;
        for (const VertexLabel &w : g.neighbors(v)) {
            incident.push_back(VertexLabel::edge_vertex(v.token(), w.token()));
        }
        for (std::size_t i = 0; i < incident.size(); ++i) {
            for (std::size_t j = i + 1; j < incident.size(); ++j) {
                b.add_edge(incident[i], incident[j]);
            }
        }
    }
}

} // namespace

Graph line_graph(const Graph &g) {
    GraphBuilder b;
    build_line_part(g, b);
    return b.build();
}

Graph line_cut_vertex_graph(const Graph &g) {
    GraphBuilder b;
    build_line_part(g, b);
    for (const VertexLabel &cut : articulation_points(g)) {
        VertexLabel copy = VertexLabel::cut_copy(cut.token());
        b.add_vertex(copy);
        for (const VertexLabel &w : g.neighbors(cut)) {
            b.add_edge(copy, VertexLabel::edge_vertex(cut.token(), w.token()));
        }
    }
    return b.build();
}

Graph apply_pipeline(const Graph &g, std::span<const OperatorId> ops) {
    Graph result = g;
    for (OperatorId op : ops) {
        switch (op) {
        case OperatorId::Subdivision:
            result = subdivision(result);
            break;
        case OperatorId::LineGraph:
            result = line_graph(result);
            break;
        case OperatorId::LineCutVertex:
            result = line_cut_vertex_graph(result);
            break;
        }
    }
    return result;
}

std::string operator_name(OperatorId op) {
    switch (op) {
    case OperatorId::Subdivision:
        return "subdivision";
    case OperatorId::LineGraph:
        return "line";
    case OperatorId::LineCutVertex:
        return "line-cut";
    }
    return "?";
}

} // namespace zagreb
