#include "zagreb/graph.hpp"

#include "zagreb/errors.hpp"

#include <algorithm>

namespace zagreb {

namespace {

// Index of v in the sorted vertex vector, or npos.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t find_index(const std::vector<VertexLabel> &vertices, const VertexLabel &v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) {
        return npos;
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

} // namespace

bool Graph::contains(const VertexLabel &v) const {
    return find_index(vertices_, v) != npos;
}

std::size_t Graph::index_of(const VertexLabel &v) const {
    std::size_t idx = find_index(vertices_, v);
    if (idx == npos) {
        throw UnknownVertexError(v.token());
    }
    return idx;
}

bool Graph::adjacent(const VertexLabel &u, const VertexLabel &v) const {
    std::size_t iu = find_index(vertices_, u);
    std::size_t iv = find_index(vertices_, v);
    if (iu == npos || iv == npos) {
        return false;
    }
    const auto &row = adj_[iu];
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(iv));
}

std::size_t Graph::degree(const VertexLabel &v) const {
    return adj_[index_of(v)].size();
}

std::vector<VertexLabel> Graph::neighbors(const VertexLabel &v) const {
    std::vector<VertexLabel> out;
    for (std::uint32_t idx : adj_[index_of(v)]) {
        out.push_back(vertices_[idx]);
    }
    return out;
}

std::vector<std::pair<VertexLabel, VertexLabel>> Graph::edges() const {
    std::vector<std::pair<VertexLabel, VertexLabel>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < vertices_.size(); ++u) {
        for (std::uint32_t v : adj_[u]) {
            if (u < v) {
                out.emplace_back(vertices_[u], vertices_[v]);
            }
        }
    }
    return out;
}

GraphBuilder &GraphBuilder::add_vertex(const VertexLabel &v) {
    adjacency_.try_emplace(v);
    return *this;
}

GraphBuilder &GraphBuilder::add_edge(const VertexLabel &u, const VertexLabel &v) {
    if (u == v) {
        throw InvalidParameterError("self-loop at vertex \"" + u.token() + "\"");
    }
    if (has_edge(u, v)) {
        throw InvalidParameterError("duplicate edge {" + u.token() + ", " + v.token() + "}");
    }
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    return *this;
}

bool GraphBuilder::has_edge(const VertexLabel &u, const VertexLabel &v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.count(v) > 0;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.vertices_.reserve(adjacency_.size());
    for (const auto &[label, _] : adjacency_) {
        g.vertices_.push_back(label);
    }
    // adjacency_ is label-ordered, so vertices_ is already sorted; labels
    // that render identically would sit next to each other.
    for (std::size_t i = 1; i < g.vertices_.size(); ++i) {
        if (g.vertices_[i - 1].token() == g.vertices_[i].token()) {
            throw InvalidParameterError(
                "distinct labels render the same token \"" + g.vertices_[i].token() + "\"");
        }
    }

    g.adj_.resize(g.vertices_.size());
    std::size_t half_edges = 0;
    std::size_t u = 0;
    for (const auto &[label, neighbors] : adjacency_) {
        auto &row = g.adj_[u++];
        row.reserve(neighbors.size());
        for (const VertexLabel &nb : neighbors) {
            row.push_back(static_cast<std::uint32_t>(find_index(g.vertices_, nb)));
        }
        std::sort(row.begin(), row.end());
        half_edges += row.size();
    }
    g.edge_count_ = half_edges / 2;
    return g;
}

} // namespace zagreb
