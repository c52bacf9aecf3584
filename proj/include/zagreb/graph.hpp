#pragma once

#include "zagreb/vertex_label.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace zagreb {

// Simple undirected graph. Immutable once built; construction goes through
// GraphBuilder, which rejects self-loops, parallel edges and label token
// collisions. Safe to share across concurrent readers.
class Graph {
public:
    Graph() = default; // the empty graph

    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edge_count_; }

    // Vertices in canonical (token-sorted) order.
    const std::vector<VertexLabel> &vertices() const { return vertices_; }

    bool contains(const VertexLabel &v) const;
    bool adjacent(const VertexLabel &u, const VertexLabel &v) const;

    // Throws UnknownVertexError when v is not a vertex.
    std::size_t degree(const VertexLabel &v) const;
    std::vector<VertexLabel> neighbors(const VertexLabel &v) const;

    // Edges as canonical pairs (first <= second), sorted.
    std::vector<std::pair<VertexLabel, VertexLabel>> edges() const;

    // Integer-indexed view for algorithms; indices follow vertices() order.
    std::size_t index_of(const VertexLabel &v) const; // throws UnknownVertexError
    const std::vector<std::vector<std::uint32_t>> &adjacency_indices() const {
        return adj_;
    }

    bool operator==(const Graph &other) const {
        return vertices_ == other.vertices_ && adj_ == other.adj_;
    }

private:
    friend class GraphBuilder;

    std::vector<VertexLabel> vertices_;            // sorted
    std::vector<std::vector<std::uint32_t>> adj_;  // sorted neighbor indices
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    GraphBuilder &add_vertex(const VertexLabel &v);
    // Endpoints are added implicitly. Throws InvalidParameterError on a
    // self-loop or a duplicate edge.
    GraphBuilder &add_edge(const VertexLabel &u, const VertexLabel &v);

    bool has_edge(const VertexLabel &u, const VertexLabel &v) const;

    // Validates that rendered tokens are unique across labels, then freezes.
    Graph build() const;

private:
    std::map<VertexLabel, std::set<VertexLabel>> adjacency_;
};

} // namespace zagreb
