#pragma once

#include "zagreb/graph.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace zagreb {

// All index values are exact 64-bit integers with overflow detection;
// OverflowError is thrown if any sum or product leaves the int64 range.
using Count = std::int64_t;

using DegreeDistribution = std::map<Count, Count>;
// Edge buckets keyed by (min endpoint degree, max endpoint degree).
using EdgePartition = std::map<std::pair<Count, Count>, Count>;

// Sum of squared vertex degrees.
Count first_zagreb(const Graph &g);
// The same index through its second form, sum of d(u)+d(v) over edges.
// Kept separate so the two routes can be checked against each other.
Count first_zagreb_edge_sum(const Graph &g);

// Sum of d(u) * d(v) over edges.
Count second_zagreb(const Graph &g);

// Sums over unordered pairs of distinct non-adjacent vertices, by direct
// pair enumeration. Quadratic in the order, which is fine at desk scale;
// this is the definitional route the identity forms are checked against.
Count first_zagreb_coindex(const Graph &g);
Count second_zagreb_coindex(const Graph &g);

// The same coindices through the index identities
//   2m(n-1) - M1   and   2m^2 - M1/2 - M2.
// The second throws OverflowError if M1 is odd (cannot happen for a valid
// graph; guarded rather than assumed).
Count first_zagreb_coindex_identity(const Graph &g);
Count second_zagreb_coindex_identity(const Graph &g);

DegreeDistribution degree_distribution(const Graph &g);
EdgePartition edge_degree_partition(const Graph &g);

struct IndexReport {
    Count order = 0;
    Count size = 0;
    Count m1 = 0;
    Count m2 = 0;
    Count m1_coindex = 0;
    Count m2_coindex = 0;
    DegreeDistribution degree_distribution;
    EdgePartition edge_partition;
};

// Bundles everything above and verifies the report's internal consistency
// (partition totals, both M1 forms, partition-derived M1/M2).
IndexReport index_report(const Graph &g);

} // namespace zagreb
