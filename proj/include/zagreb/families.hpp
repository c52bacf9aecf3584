#pragma once

#include "zagreb/graph.hpp"

namespace zagreb {

// Cycle of length k with `leaves` pendant vertices all attached to one cycle
// vertex (the hub). n = k + leaves.
struct CycleStarParams {
    int k;      // cycle length, k >= 3
    int leaves; // pendant count, >= 1

    int n() const { return k + leaves; }
};

// Deterministic labels: hub "c0", cycle "c1".."c<k-1>", leaves "l1".."l<leaves>".
// Throws InvalidParameterError naming the violated bound.
Graph cycle_star(const CycleStarParams &params);

} // namespace zagreb
