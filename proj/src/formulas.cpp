#include "zagreb/formulas.hpp"

#include "zagreb/errors.hpp"

#include <algorithm>
#include <string>

namespace zagreb {

const std::vector<FormulaId> &scalar_formula_ids() {
    static const std::vector<FormulaId> ids = {
        FormulaId::T21_M1,   FormulaId::T21_M2,   FormulaId::T24_M1CO, FormulaId::T25_M2CO,
        FormulaId::T31_M1,   FormulaId::T31_M2,   FormulaId::T32_M1CO, FormulaId::T33_M2CO,
        FormulaId::LS_ORDER, FormulaId::LS_SIZE,  FormulaId::LCS_ORDER, FormulaId::LCS_SIZE,
    };
    return ids;
}

std::string formula_name(FormulaId id) {
    switch (id) {
    case FormulaId::T21_M1: return "T21_M1";
    case FormulaId::T21_M2: return "T21_M2";
    case FormulaId::T24_M1CO: return "T24_M1CO";
    case FormulaId::T25_M2CO: return "T25_M2CO";
    case FormulaId::T31_M1: return "T31_M1";
    case FormulaId::T31_M2: return "T31_M2";
    case FormulaId::T32_M1CO: return "T32_M1CO";
    case FormulaId::T33_M2CO: return "T33_M2CO";
    case FormulaId::LS_ORDER: return "LS_ORDER";
    case FormulaId::LS_SIZE: return "LS_SIZE";
    case FormulaId::LCS_ORDER: return "LCS_ORDER";
    case FormulaId::LCS_SIZE: return "LCS_SIZE";
    case FormulaId::LS_DEGREE_PARTITION: return "LS_DEGREE_PARTITION";
    case FormulaId::LCS_DEGREE_PARTITION: return "LCS_DEGREE_PARTITION";
    case FormulaId::LS_EDGE_PARTITION: return "LS_EDGE_PARTITION";
    case FormulaId::LCS_EDGE_PARTITION: return "LCS_EDGE_PARTITION";
    }
    return "?";
}

namespace {

void require_domain(long long k, long long n) {
    if (k < 3) {
        throw DomainError("k must be >= 3, got " + std::to_string(k));
    }
    if (n - k < 1) {
        throw DomainError("n - k must be >= 1, got " + std::to_string(n - k));
    }
}

Count binom2(Count x) {
    return x * (x - 1) / 2;
}

void merge_bucket(DegreeDistribution &dist, Count degree, Count count) {
    if (count != 0) {
        dist[degree] += count;
    }
}

void merge_bucket(EdgePartition &partition, Count d1, Count d2, Count count) {
    if (count != 0) {
        partition[{std::min(d1, d2), std::max(d1, d2)}] += count;
    }
}

} // namespace

// The scalar formulas are transcribed term-for-term from their statements,
// on purpose: whether they are *correct* is exactly what the verification
// harness decides, so nothing here may be simplified or "fixed".
Rational evaluate_formula(FormulaId id, long long k, long long n) {
    require_domain(k, n);
    const Rational N(n), K(k);
    const Rational N2 = N * N, N3 = N2 * N, N4 = N3 * N;
    const Rational K2 = K * K, K3 = K2 * K, K4 = K3 * K;
    const Rational half(1, 2);

    switch (id) {
    case FormulaId::T21_M1:
        // n^3 + (6-3k)n^2 + (3k^2-12k+13)n - k^3 + 6k^2 - 5k
        return N3 + (Rational(6) - Rational(3) * K) * N2 +
               (Rational(3) * K2 - Rational(12) * K + Rational(13)) * N - K3 +
               Rational(6) * K2 - Rational(5) * K;
    case FormulaId::T21_M2:
        // 1/2 (n^4 + (7-4k)n^3 + (6k^2-21k+20)n^2 - (4k^3-21k^2+40k-32)n)
        //   + 1/2 (k^4 - 7k^3 + 20k^2 - 16k)
        return half * (N4 + (Rational(7) - Rational(4) * K) * N3 +
                       (Rational(6) * K2 - Rational(21) * K + Rational(20)) * N2 -
                       (Rational(4) * K3 - Rational(21) * K2 + Rational(40) * K - Rational(32)) * N) +
               half * (K4 - Rational(7) * K3 + Rational(20) * K2 - Rational(16) * K);
    case FormulaId::T24_M1CO:
        // n^3 + (3-k)n^2 - (k^2-12k+18)n + k^3 - 7k^2 + 6k
        return N3 + (Rational(3) - K) * N2 -
               (K2 - Rational(12) * K + Rational(18)) * N + K3 - Rational(7) * K2 +
               Rational(6) * K;
    case FormulaId::T25_M2CO:
        // n^3 + n^2/2 (2k-1) - n/2 (8k^3-32k^2+38k-19) + 1/2 (6k^3-25k^2+21k)
        return N3 + (N2 * half) * (Rational(2) * K - Rational(1)) -
               (N * half) * (Rational(8) * K3 - Rational(32) * K2 + Rational(38) * K - Rational(19)) +
               half * (Rational(6) * K3 - Rational(25) * K2 + Rational(21) * K);
    case FormulaId::T31_M1:
        // n^3 + (11-3k)n^2 + (3k^2-22k+40)n - k^3 + 11k^2 - 32k + 14
        return N3 + (Rational(11) - Rational(3) * K) * N2 +
               (Rational(3) * K2 - Rational(22) * K + Rational(40)) * N - K3 +
               Rational(11) * K2 - Rational(32) * K + Rational(14);
    case FormulaId::T31_M2:
        // 1/2 (n^4 + k^4 + (13-4k)n^3 + (6k^2-37k+56)n^2 - (4k^3-35k^2+96k-80)n)
        //   - 11/2 k^3 + 22k^2 - 34k + 9
        return half * (N4 + K4 + (Rational(13) - Rational(4) * K) * N3 +
                       (Rational(6) * K2 - Rational(37) * K + Rational(56)) * N2 -
                       (Rational(4) * K3 - Rational(35) * K2 + Rational(96) * K - Rational(80)) * N) -
               Rational(11, 2) * K3 + Rational(22) * K2 - Rational(34) * K + Rational(9);
    case FormulaId::T32_M1CO:
        // 2n^3 + (22-4k)n^2 + (2k^2-10k-28)n - 4k^2 + 28k - 14
        return Rational(2) * N3 + (Rational(22) - Rational(4) * K) * N2 +
               (Rational(2) * K2 - Rational(10) * K - Rational(28)) * N - Rational(4) * K2 +
               Rational(28) * K - Rational(14);
    case FormulaId::T33_M2CO:
        // 1/2 (8n^3 + (62-18k)n^2 + (12k^2-52k-32)n)
        //   - 1/4 k^4 - 15/4 k^3 + 12k^2 + 5k - 7/2
        return half * (Rational(8) * N3 + (Rational(62) - Rational(18) * K) * N2 +
                       (Rational(12) * K2 - Rational(52) * K - Rational(32)) * N) -
               Rational(1, 4) * K4 - Rational(15, 4) * K3 + Rational(12) * K2 +
               Rational(5) * K - Rational(7, 2);
    case FormulaId::LS_ORDER:
        // 2n
        return Rational(2) * N;
    case FormulaId::LS_SIZE:
        // 1/2 (n^2 + k^2 + 5n - 2nk - k)
        return half * (N2 + K2 + Rational(5) * N - Rational(2) * N * K - K);
    case FormulaId::LCS_ORDER:
        // 3n - k + 1
        return Rational(3) * N - K + Rational(1);
    case FormulaId::LCS_SIZE:
        // 1/2 (n^2 + k^2 + 11n - 7k - 2nk + 4)
        return half * (N2 + K2 + Rational(11) * N - Rational(7) * K - Rational(2) * N * K +
                      Rational(4));
    default:
        throw InvalidParameterError("evaluate_formula: " + formula_name(id) +
                                    " is not a scalar formula");
    }
}

DegreeDistribution predicted_degree_partition(FormulaId id, long long k, long long n) {
    require_domain(k, n);
    const Count a = n - k; // pendant count
    DegreeDistribution dist;
    switch (id) {
    case FormulaId::LS_DEGREE_PARTITION:
        merge_bucket(dist, 2, 2 * k - 2);
        merge_bucket(dist, a + 2, a + 2);
        merge_bucket(dist, 1, a);
        return dist;
    case FormulaId::LCS_DEGREE_PARTITION:
        merge_bucket(dist, 2, (2 * k - 2) + 2 * a);
        merge_bucket(dist, a + 3, 2);
        merge_bucket(dist, a + 2, 1);
        merge_bucket(dist, a + 4, a);
        return dist;
    default:
        throw InvalidParameterError("predicted_degree_partition: " + formula_name(id) +
                                    " is not a degree partition");
    }
}

EdgePartition predicted_edge_partition(FormulaId id, long long k, long long n) {
    require_domain(k, n);
    const Count a = n - k;
    EdgePartition partition;
    switch (id) {
    case FormulaId::LS_EDGE_PARTITION:
        merge_bucket(partition, 2, 2, 2 * k - 3);
        merge_bucket(partition, 2, a + 2, 2);
        merge_bucket(partition, 1, a + 2, a);
        merge_bucket(partition, a + 2, a + 2, binom2(a + 2));
        return partition;
    case FormulaId::LCS_EDGE_PARTITION:
        // Nine stated buckets; the "degree n and n-1" endpoints are read as
        // n-k+3 and n-k+2, the reading that coincides with the stated ones
        // at k = 3.
        merge_bucket(partition, 2, 2, 2 * k - 3);
        merge_bucket(partition, 2, 2, a);
        merge_bucket(partition, 2, a + 3, 2);
        merge_bucket(partition, 2, a + 4, 2 * a);
        merge_bucket(partition, a + 3, a + 2, 2);
        merge_bucket(partition, a + 2, a + 4, a);
        merge_bucket(partition, a + 3, a + 3, 1);
        merge_bucket(partition, a + 3, a + 4, 2 * a);
        merge_bucket(partition, a + 4, a + 4, binom2(a));
        return partition;
    default:
        throw InvalidParameterError("predicted_edge_partition: " + formula_name(id) +
                                    " is not an edge partition");
    }
}

EdgePartition lcs_edge_partition_literal(long long k, long long n) {
    require_domain(k, n);
    const Count a = n - k;
    EdgePartition partition;
    merge_bucket(partition, 2, 2, 2 * k - 3);
    merge_bucket(partition, 2, 2, a);
    merge_bucket(partition, 2, a + 3, 2);
    merge_bucket(partition, 2, a + 4, 2 * a);
    merge_bucket(partition, n, n - 1, 2);       // taken literally
    merge_bucket(partition, n - 1, a + 4, a);   // taken literally
    merge_bucket(partition, a + 3, a + 3, 1);
    merge_bucket(partition, a + 3, a + 4, 2 * a);
    merge_bucket(partition, a + 4, a + 4, binom2(a));
    return partition;
}

} // namespace zagreb
