#include "zagreb/families.hpp"

#include "zagreb/errors.hpp"

#include <string>

namespace zagreb {

Graph cycle_star(const CycleStarParams &params) {
    if (params.k < 3) {
        throw InvalidParameterError(
            "cycle length k must be >= 3, got " + std::to_string(params.k));
    }
    if (params.leaves < 1) {
        throw InvalidParameterError(
            "leaf count must be >= 1, got " + std::to_string(params.leaves));
    }

    GraphBuilder b;
    std::vector<VertexLabel> cycle;
    cycle.reserve(static_cast<std::size_t>(params.k));
    for (int i = 0; i < params.k; ++i) {
        cycle.push_back(VertexLabel::original("c" + std::to_string(i)));
    }
    for (int i = 0; i < params.k; ++i) {
        b.add_edge(cycle[static_cast<std::size_t>(i)],
                   cycle[static_cast<std::size_t>((i + 1) % params.k)]);
    }
    for (int i = 1; i <= params.leaves; ++i) {
        b.add_edge(cycle[0], VertexLabel::original("l" + std::to_string(i)));
    }
    return b.build();
}

} // namespace zagreb
