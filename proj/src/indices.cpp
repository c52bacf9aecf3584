#include "zagreb/indices.hpp"

#include "zagreb/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace zagreb {

namespace {

Count checked_add(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in index computation (add)");
    }
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in index computation (mul)");
    }
    return out;
}

Count degree_of(const Graph &g, std::size_t v) {
    return static_cast<Count>(g.adjacency_indices()[v].size());
}

} // namespace

Count first_zagreb(const Graph &g) {
    Count total = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        Count d = degree_of(g, v);
        total = checked_add(total, checked_mul(d, d));
    }
    return total;
}

Count first_zagreb_edge_sum(const Graph &g) {
    const auto &adj = g.adjacency_indices();
    Count total = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (std::uint32_t v : adj[u]) {
            if (u < v) {
                total = checked_add(total, checked_add(degree_of(g, u), degree_of(g, v)));
            }
        }
    }
    return total;
}

Count second_zagreb(const Graph &g) {
    const auto &adj = g.adjacency_indices();
    Count total = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (std::uint32_t v : adj[u]) {
            if (u < v) {
                total = checked_add(total, checked_mul(degree_of(g, u), degree_of(g, v)));
            }
        }
    }
    return total;
}

namespace {

// Sum over unordered pairs of distinct non-adjacent vertices of
// combine(d(u), d(v)).
template <typename Combine>
Count coindex_sum(const Graph &g, Combine combine) {
    const auto &adj = g.adjacency_indices();
    Count total = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (std::size_t v = u + 1; v < adj.size(); ++v) {
            if (!std::binary_search(adj[u].begin(), adj[u].end(), static_cast<std::uint32_t>(v))) {
                total = checked_add(total, combine(degree_of(g, u), degree_of(g, v)));
            }
        }
    }
    return total;
}

} // namespace

Count first_zagreb_coindex(const Graph &g) {
    return coindex_sum(g, [](Count a, Count b) { return checked_add(a, b); });
}

Count second_zagreb_coindex(const Graph &g) {
    return coindex_sum(g, [](Count a, Count b) { return checked_mul(a, b); });
}

Count first_zagreb_coindex_identity(const Graph &g) {
    Count n = static_cast<Count>(g.order());
    Count m = static_cast<Count>(g.size());
    // 2m(n-1) - M1
    return checked_add(checked_mul(2, checked_mul(m, n - 1)), -first_zagreb(g));
}

Count second_zagreb_coindex_identity(const Graph &g) {
    Count m = static_cast<Count>(g.size());
    Count m1 = first_zagreb(g);
    if (m1 % 2 != 0) {
        // M1 is an even sum over edge endpoints; odd means a broken graph.
        throw OverflowError("first Zagreb index is odd; graph invariants violated");
    }
    // 2m^2 - M1/2 - M2
    Count twice_m_sq = checked_mul(2, checked_mul(m, m));
    return checked_add(checked_add(twice_m_sq, -(m1 / 2)), -second_zagreb(g));
}

DegreeDistribution degree_distribution(const Graph &g) {
    DegreeDistribution dist;
    for (std::size_t v = 0; v < g.order(); ++v) {
        ++dist[degree_of(g, v)];
    }
    return dist;
}

EdgePartition edge_degree_partition(const Graph &g) {
    const auto &adj = g.adjacency_indices();
    EdgePartition partition;
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (std::uint32_t v : adj[u]) {
            if (u < v) {
                Count du = degree_of(g, u);
                Count dv = degree_of(g, v);
                ++partition[{std::min(du, dv), std::max(du, dv)}];
            }
        }
    }
    return partition;
}

IndexReport index_report(const Graph &g) {
    IndexReport report;
    report.order = static_cast<Count>(g.order());
    report.size = static_cast<Count>(g.size());
    report.m1 = first_zagreb(g);
    report.m2 = second_zagreb(g);
    report.m1_coindex = first_zagreb_coindex(g);
    report.m2_coindex = second_zagreb_coindex(g);
    report.degree_distribution = degree_distribution(g);
    report.edge_partition = edge_degree_partition(g);

    Count vertex_total = 0;
    for (const auto &[d, count] : report.degree_distribution) {
        vertex_total = checked_add(vertex_total, count);
    }
    Count edge_total = 0, m1_from_partition = 0, m2_from_partition = 0;
    for (const auto &[pair, count] : report.edge_partition) {
        edge_total = checked_add(edge_total, count);
        m1_from_partition =
            checked_add(m1_from_partition, checked_mul(count, checked_add(pair.first, pair.second)));
        m2_from_partition =
            checked_add(m2_from_partition, checked_mul(count, checked_mul(pair.first, pair.second)));
    }
    if (vertex_total != report.order || edge_total != report.size ||
        m1_from_partition != report.m1 || m1_from_partition != first_zagreb_edge_sum(g) ||
        m2_from_partition != report.m2) {
        throw std::logic_error("index report internal consistency check failed");
    }
    return report;
}

} // namespace zagreb
