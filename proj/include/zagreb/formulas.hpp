#pragma once

#include "zagreb/indices.hpp"
#include "zagreb/rational.hpp"

#include <string>
#include <vector>

namespace zagreb {

// Every closed-form expression under test, one id per formula. The first
// eight are the published index/coindex polynomials in (n, k); the ORDER /
// SIZE entries are the order and size claims for the two derived graphs;
// the *_PARTITION entries are the claimed degree and edge partitions.
//
// LS  = line graph of the subdivision of the cycle-star graph,
// LCS = line cut-vertex graph of the subdivision of the cycle-star graph.
enum class FormulaId {
    T21_M1,
    T21_M2,
    T24_M1CO,
    T25_M2CO,
    T31_M1,
    T31_M2,
    T32_M1CO,
    T33_M2CO,
    LS_ORDER,
    LS_SIZE,
    LCS_ORDER,
    LCS_SIZE,
    LS_DEGREE_PARTITION,
    LCS_DEGREE_PARTITION,
    LS_EDGE_PARTITION,
    LCS_EDGE_PARTITION,
};

// The twelve scalar ids, in declaration order (report order).
const std::vector<FormulaId> &scalar_formula_ids();

std::string formula_name(FormulaId id);

// Exact evaluation of a scalar formula, transcribed verbatim from its
// source statement (no algebraic simplification). Throws DomainError when
// k < 3 or n - k < 1, and InvalidParameterError for a partition id.
Rational evaluate_formula(FormulaId id, long long k, long long n);

// Claimed degree distributions (degree -> count) for LS / LCS.
// Accepts only LS_DEGREE_PARTITION / LCS_DEGREE_PARTITION.
DegreeDistribution predicted_degree_partition(FormulaId id, long long k, long long n);

// Claimed edge partitions ((d1 <= d2) -> count) for LS / LCS. For LCS this
// is the transcription of record, which reads the stated "degree n and n-1"
// endpoints as n-k+3 and n-k+2 (the two readings coincide at k = 3).
// Accepts only LS_EDGE_PARTITION / LCS_EDGE_PARTITION.
EdgePartition predicted_edge_partition(FormulaId id, long long k, long long n);

// Alternative reading of the LCS edge partition that takes "degree n and
// n-1" literally. The verification harness compares both readings against
// the constructed graphs.
EdgePartition lcs_edge_partition_literal(long long k, long long n);

} // namespace zagreb
