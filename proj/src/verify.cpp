#include "zagreb/verify.hpp"

#include "zagreb/errors.hpp"
#include "zagreb/families.hpp"
#include "zagreb/operators.hpp"

#include <future>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zagreb {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::NonInteger: return "NonInteger";
    }
    return "?";
}

std::string FormulaTally::uniform_verdict() const {
    long long total = match + mismatch + non_integer;
    if (match == total) return verdict_name(Verdict::Match);
    if (mismatch == total) return verdict_name(Verdict::Mismatch);
    if (non_integer == total) return verdict_name(Verdict::NonInteger);
    return "domain-dependent";
}

bool VerificationReport::all_match() const {
    for (const auto &record : records) {
        if (record.verdict != Verdict::Match) {
            return false;
        }
    }
    for (const auto &diff : partition_diffs) {
        // The literal-reading comparison is a diagnostic, not a claim under
        // test; only the readings of record gate success.
        if (diff.reading == PartitionReading::Record && !diff.match) {
            return false;
        }
    }
    return true;
}

namespace {

struct PointGraphs {
    Graph line_of_subdivision;
    Graph line_cut_of_subdivision;
};

PointGraphs build_point_graphs(int k, int n) {
    Graph base = cycle_star({k, n - k});
    Graph subdivided = subdivision(base);
    return {line_graph(subdivided), line_cut_vertex_graph(subdivided)};
}

void check_oracle_consistency(const IndexReport &report, const Graph &g, int k, int n,
                              const char *which) {
    if (report.m1_coindex != first_zagreb_coindex_identity(g) ||
        report.m2_coindex != second_zagreb_coindex_identity(g) ||
        report.m1 != first_zagreb_edge_sum(g)) {
        std::ostringstream msg;
        msg << "oracle self-consistency failure for " << which << " at (k=" << k
            << ", n=" << n << ")";
        throw std::logic_error(msg.str());
    }
}

std::string bucket_key(Count d) {
    return std::to_string(d);
}

std::string bucket_key(const std::pair<Count, Count> &d) {
    return std::to_string(d.first) + "-" + std::to_string(d.second);
}

template <typename Partition>
PartitionDiff diff_partitions(int k, int n, FormulaId id, PartitionReading reading,
                              const Partition &predicted, const Partition &actual) {
    PartitionDiff diff;
    diff.k = k;
    diff.n = n;
    diff.partition = id;
    diff.reading = reading;
    diff.match = true;

    Partition merged_keys = predicted;
    for (const auto &[key, _] : actual) {
        merged_keys.try_emplace(key, 0);
    }
    for (const auto &[key, _] : merged_keys) {
        auto pit = predicted.find(key);
        auto ait = actual.find(key);
        BucketDiff bucket;
        bucket.bucket = bucket_key(key);
        bucket.predicted = pit == predicted.end() ? 0 : pit->second;
        bucket.actual = ait == actual.end() ? 0 : ait->second;
        if (bucket.predicted != bucket.actual) {
            diff.match = false;
        }
        diff.buckets.push_back(std::move(bucket));
    }
    return diff;
}

} // namespace

std::map<FormulaId, long long> oracle_values(int k, int n) {
    PointGraphs graphs = build_point_graphs(k, n);
    IndexReport ls = index_report(graphs.line_of_subdivision);
    IndexReport lcs = index_report(graphs.line_cut_of_subdivision);
    check_oracle_consistency(ls, graphs.line_of_subdivision, k, n, "L(S(CS))");
    check_oracle_consistency(lcs, graphs.line_cut_of_subdivision, k, n, "Lc(S(CS))");

    return {
        {FormulaId::T21_M1, ls.m1},
        {FormulaId::T21_M2, ls.m2},
        {FormulaId::T24_M1CO, ls.m1_coindex},
        {FormulaId::T25_M2CO, ls.m2_coindex},
        {FormulaId::T31_M1, lcs.m1},
        {FormulaId::T31_M2, lcs.m2},
        {FormulaId::T32_M1CO, lcs.m1_coindex},
        {FormulaId::T33_M2CO, lcs.m2_coindex},
        {FormulaId::LS_ORDER, ls.order},
        {FormulaId::LS_SIZE, ls.size},
        {FormulaId::LCS_ORDER, lcs.order},
        {FormulaId::LCS_SIZE, lcs.size},
    };
}

PointResult verify_point(int k, int n) {
    PointGraphs graphs = build_point_graphs(k, n);
    IndexReport ls = index_report(graphs.line_of_subdivision);
    IndexReport lcs = index_report(graphs.line_cut_of_subdivision);
    check_oracle_consistency(ls, graphs.line_of_subdivision, k, n, "L(S(CS))");
    check_oracle_consistency(lcs, graphs.line_cut_of_subdivision, k, n, "Lc(S(CS))");

    const std::map<FormulaId, long long> oracle = {
        {FormulaId::T21_M1, ls.m1},       {FormulaId::T21_M2, ls.m2},
        {FormulaId::T24_M1CO, ls.m1_coindex}, {FormulaId::T25_M2CO, ls.m2_coindex},
        {FormulaId::T31_M1, lcs.m1},      {FormulaId::T31_M2, lcs.m2},
        {FormulaId::T32_M1CO, lcs.m1_coindex}, {FormulaId::T33_M2CO, lcs.m2_coindex},
        {FormulaId::LS_ORDER, ls.order},  {FormulaId::LS_SIZE, ls.size},
        {FormulaId::LCS_ORDER, lcs.order}, {FormulaId::LCS_SIZE, lcs.size},
    };

    PointResult result;
    for (FormulaId id : scalar_formula_ids()) {
        VerificationRecord record;
        record.k = k;
        record.n = n;
        record.formula = id;
        record.formula_value = evaluate_formula(id, k, n);
        record.oracle_value = oracle.at(id);
        if (!record.formula_value.is_integer()) {
            record.verdict = Verdict::NonInteger;
        } else if (record.formula_value == Rational(record.oracle_value)) {
            record.verdict = Verdict::Match;
        } else {
            record.verdict = Verdict::Mismatch;
        }
        result.records.push_back(std::move(record));
    }

    result.partition_diffs.push_back(
        diff_partitions(k, n, FormulaId::LS_DEGREE_PARTITION, PartitionReading::Record,
                        predicted_degree_partition(FormulaId::LS_DEGREE_PARTITION, k, n),
                        ls.degree_distribution));
    result.partition_diffs.push_back(
        diff_partitions(k, n, FormulaId::LCS_DEGREE_PARTITION, PartitionReading::Record,
                        predicted_degree_partition(FormulaId::LCS_DEGREE_PARTITION, k, n),
                        lcs.degree_distribution));
    result.partition_diffs.push_back(
        diff_partitions(k, n, FormulaId::LS_EDGE_PARTITION, PartitionReading::Record,
                        predicted_edge_partition(FormulaId::LS_EDGE_PARTITION, k, n),
                        ls.edge_partition));
    result.partition_diffs.push_back(
        diff_partitions(k, n, FormulaId::LCS_EDGE_PARTITION, PartitionReading::Record,
                        predicted_edge_partition(FormulaId::LCS_EDGE_PARTITION, k, n),
                        lcs.edge_partition));
    result.partition_diffs.push_back(
        diff_partitions(k, n, FormulaId::LCS_EDGE_PARTITION, PartitionReading::Literal,
                        lcs_edge_partition_literal(k, n), lcs.edge_partition));
    return result;
}

VerificationReport verify_grid(int k_min, int k_max, int leaves_min, int leaves_max) {
    if (k_min < 3 || k_min > k_max) {
        throw DomainError("grid requires 3 <= k_min <= k_max");
    }
    if (leaves_min < 1 || leaves_min > leaves_max) {
        throw DomainError("grid requires 1 <= leaves_min <= leaves_max");
    }

    std::vector<std::pair<int, int>> points; // (k, n), k then n ascending
    for (int k = k_min; k <= k_max; ++k) {
        for (int leaves = leaves_min; leaves <= leaves_max; ++leaves) {
            points.emplace_back(k, k + leaves);
        }
    }

    // Points are independent; evaluate them concurrently and merge in grid
    // order so the report never depends on scheduling.
    std::vector<std::future<PointResult>> futures;
    futures.reserve(points.size());
    for (auto [k, n] : points) {
        futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                     [k = k, n = n] { return verify_point(k, n); }));
    }

    VerificationReport report;
    report.grid = {k_min, k_max, leaves_min, leaves_max};
    for (std::size_t i = 0; i < points.size(); ++i) {
        try {
            PointResult result = futures[i].get();
            report.records.insert(report.records.end(), result.records.begin(),
                                  result.records.end());
            report.partition_diffs.insert(report.partition_diffs.end(),
                                          result.partition_diffs.begin(),
                                          result.partition_diffs.end());
        } catch (const std::exception &e) {
            std::ostringstream msg;
            msg << "verification failed at grid point (k=" << points[i].first
                << ", n=" << points[i].second << "): " << e.what();
            throw Error(msg.str());
        }
    }

    for (FormulaId id : scalar_formula_ids()) {
        FormulaTally tally;
        tally.formula = id;
        for (const auto &record : report.records) {
            if (record.formula != id) {
                continue;
            }
            switch (record.verdict) {
            case Verdict::Match: ++tally.match; break;
            case Verdict::Mismatch: ++tally.mismatch; break;
            case Verdict::NonInteger: ++tally.non_integer; break;
            }
        }
        report.formula_summary.push_back(tally);
    }

    const std::pair<FormulaId, PartitionReading> partition_kinds[] = {
        {FormulaId::LS_DEGREE_PARTITION, PartitionReading::Record},
        {FormulaId::LCS_DEGREE_PARTITION, PartitionReading::Record},
        {FormulaId::LS_EDGE_PARTITION, PartitionReading::Record},
        {FormulaId::LCS_EDGE_PARTITION, PartitionReading::Record},
        {FormulaId::LCS_EDGE_PARTITION, PartitionReading::Literal},
    };
    for (auto [id, reading] : partition_kinds) {
        PartitionTally tally;
        tally.partition = id;
        tally.reading = reading;
        for (const auto &diff : report.partition_diffs) {
            if (diff.partition == id && diff.reading == reading) {
                ++tally.total_points;
                if (diff.match) {
                    ++tally.matching_points;
                }
            }
        }
        report.partition_summary.push_back(tally);
    }
    return report;
}

} // namespace zagreb
