#include "zagreb/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace zagreb {

namespace {

std::string reading_name(PartitionReading reading) {
    return reading == PartitionReading::Record ? "record" : "literal";
}

// Formula column of a partition-diff CSV row, e.g. "LCS_EDGE_PARTITION[4-5]"
// or "LCS_EDGE_PARTITION:literal[4-5]".
std::string partition_row_formula(const PartitionDiff &diff, const BucketDiff &bucket) {
    std::string out = formula_name(diff.partition);
    if (diff.reading == PartitionReading::Literal) {
        out += ":literal";
    }
    out += "[" + bucket.bucket + "]";
    return out;
}

std::string emit_csv(const VerificationReport &report) {
    std::ostringstream out;
    out << "k,n,formula,formula_value,oracle_value,verdict\n";
    for (const auto &record : report.records) {
        out << record.k << "," << record.n << "," << formula_name(record.formula) << ","
            << record.formula_value.str() << "," << record.oracle_value << ","
            << verdict_name(record.verdict) << "\n";
    }
    for (const auto &diff : report.partition_diffs) {
        for (const auto &bucket : diff.buckets) {
            out << diff.k << "," << diff.n << "," << partition_row_formula(diff, bucket) << ","
                << bucket.predicted << "," << bucket.actual << ","
                << (bucket.predicted == bucket.actual ? "Match" : "Mismatch") << ",partition\n";
        }
    }
    return out.str();
}

std::string emit_json(const VerificationReport &report) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["grid"] = {{"k_min", report.grid.k_min},
                   {"k_max", report.grid.k_max},
                   {"leaves_min", report.grid.leaves_min},
                   {"leaves_max", report.grid.leaves_max}};

    doc["records"] = json::array();
    for (const auto &record : report.records) {
        doc["records"].push_back({{"k", record.k},
                                  {"n", record.n},
                                  {"formula", formula_name(record.formula)},
                                  {"formula_value", record.formula_value.str()},
                                  {"oracle_value", record.oracle_value},
                                  {"verdict", verdict_name(record.verdict)}});
    }

    doc["partition_diffs"] = json::array();
    for (const auto &diff : report.partition_diffs) {
        json buckets = json::array();
        for (const auto &bucket : diff.buckets) {
            buckets.push_back({{"bucket", bucket.bucket},
                               {"predicted", bucket.predicted},
                               {"actual", bucket.actual}});
        }
        doc["partition_diffs"].push_back({{"k", diff.k},
                                          {"n", diff.n},
                                          {"partition", formula_name(diff.partition)},
                                          {"reading", reading_name(diff.reading)},
                                          {"match", diff.match},
                                          {"buckets", std::move(buckets)}});
    }

    json formulas = json::array();
    for (const auto &tally : report.formula_summary) {
        formulas.push_back({{"formula", formula_name(tally.formula)},
                            {"match", tally.match},
                            {"mismatch", tally.mismatch},
                            {"non_integer", tally.non_integer},
                            {"verdict", tally.uniform_verdict()}});
    }
    json partitions = json::array();
    for (const auto &tally : report.partition_summary) {
        partitions.push_back({{"partition", formula_name(tally.partition)},
                              {"reading", reading_name(tally.reading)},
                              {"matching_points", tally.matching_points},
                              {"total_points", tally.total_points}});
    }
    doc["summary"] = {{"formulas", std::move(formulas)}, {"partitions", std::move(partitions)}};
    return doc.dump(2) + "\n";
}

} // namespace

std::string emit_report(const VerificationReport &report, ReportFormat fmt) {
    return fmt == ReportFormat::CSV ? emit_csv(report) : emit_json(report);
}

std::string emit_index_report(const IndexReport &report) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["order"] = report.order;
    doc["size"] = report.size;
    doc["m1"] = report.m1;
    doc["m2"] = report.m2;
    doc["m1_coindex"] = report.m1_coindex;
    doc["m2_coindex"] = report.m2_coindex;
    json degrees = json::object();
    for (const auto &[degree, count] : report.degree_distribution) {
        degrees[std::to_string(degree)] = count;
    }
    doc["degree_distribution"] = std::move(degrees);
    json partition = json::object();
    for (const auto &[pair, count] : report.edge_partition) {
        partition[std::to_string(pair.first) + "-" + std::to_string(pair.second)] = count;
    }
    doc["edge_partition"] = std::move(partition);
    return doc.dump(2) + "\n";
}

} // namespace zagreb
