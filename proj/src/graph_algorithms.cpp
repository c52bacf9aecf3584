#include "zagreb/graph_algorithms.hpp"

#include <algorithm>
#include <functional>

namespace zagreb {

std::size_t degree(const Graph &g, const VertexLabel &v) {
    return g.degree(v);
}

std::size_t connected_component_count(const Graph &g) {
    const auto &adj = g.adjacency_indices();
    std::vector<bool> seen(g.order(), false);
    std::size_t components = 0;
    std::vector<std::uint32_t> stack;
    for (std::size_t start = 0; start < adj.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        ++components;
        seen[start] = true;
        stack.push_back(static_cast<std::uint32_t>(start));
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph &g) {
    return connected_component_count(g) <= 1;
}

bool is_unicyclic(const Graph &g) {
    return is_connected(g) && g.size() == g.order();
}

std::set<VertexLabel> articulation_points(const Graph &g) {
    const auto &adj = g.adjacency_indices();
    const std::size_t n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    int timer = 0;

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent) {
        disc[v] = low[v] = timer++;
        std::size_t children = 0;
        bool parent_skipped = false;
        for (std::uint32_t w : adj[v]) {
            // Skip one occurrence of the DFS parent (simple graph: at most one).
            if (w == parent && !parent_skipped) {
                parent_skipped = true;
                continue;
            }
            if (disc[w] == -1) {
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent != v && low[w] >= disc[v]) {
                    is_cut[v] = true;
                }
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent == v && children > 1) {
            is_cut[v] = true;
        }
    };

    for (std::size_t v = 0; v < n; ++v) {
        if (disc[v] == -1) {
            dfs(v, v);
        }
    }

    std::set<VertexLabel> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (is_cut[v]) {
            out.insert(g.vertices()[v]);
        }
    }
    return out;
}

std::vector<std::size_t> degree_sequence(const Graph &g) {
    std::vector<std::size_t> degrees;
    degrees.reserve(g.order());
    for (const auto &row : g.adjacency_indices()) {
        degrees.push_back(row.size());
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

} // namespace zagreb
