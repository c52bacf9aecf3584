#pragma once

#include "zagreb/formulas.hpp"

#include <map>
#include <string>
#include <vector>

namespace zagreb {

enum class Verdict {
    Match,      // formula value is an integer equal to the oracle value
    Mismatch,   // integer, but different
    NonInteger, // the formula does not even evaluate to an integer
};

std::string verdict_name(Verdict v);

struct VerificationRecord {
    int k = 0;
    int n = 0;
    FormulaId formula = FormulaId::T21_M1;
    Rational formula_value;
    long long oracle_value = 0;
    Verdict verdict = Verdict::Match;
};

// One predicted-vs-actual bucket of a partition comparison.
struct BucketDiff {
    std::string bucket; // "d" for degree buckets, "d1-d2" for edge buckets
    long long predicted = 0;
    long long actual = 0;
};

// Which interpretation of the stated LCS edge partition is being compared.
// Everything except the LCS edge partition has only the Record reading.
enum class PartitionReading { Record, Literal };

struct PartitionDiff {
    int k = 0;
    int n = 0;
    FormulaId partition = FormulaId::LS_DEGREE_PARTITION;
    PartitionReading reading = PartitionReading::Record;
    bool match = false;
    std::vector<BucketDiff> buckets; // ascending by numeric bucket key
};

struct GridBounds {
    int k_min = 0;
    int k_max = 0;
    int leaves_min = 0;
    int leaves_max = 0;
};

struct FormulaTally {
    FormulaId formula = FormulaId::T21_M1;
    long long match = 0;
    long long mismatch = 0;
    long long non_integer = 0;

    // "Match" / "Mismatch" / "NonInteger" when every grid point agrees,
    // "domain-dependent" otherwise.
    std::string uniform_verdict() const;
};

struct PartitionTally {
    FormulaId partition = FormulaId::LS_DEGREE_PARTITION;
    PartitionReading reading = PartitionReading::Record;
    long long matching_points = 0;
    long long total_points = 0;
};

struct VerificationReport {
    GridBounds grid;
    std::vector<VerificationRecord> records;
    std::vector<PartitionDiff> partition_diffs;
    std::vector<FormulaTally> formula_summary;
    std::vector<PartitionTally> partition_summary;

    bool all_match() const;
};

// Ground truth for one grid point: builds CS_{k,n-k}, applies the two
// operator pipelines, and reads every scalar off the constructed graphs.
// Coindices are direct pair enumerations; the identity forms are checked
// against them here and a disagreement throws (it would be a bug in this
// artifact, not a finding about the formulas).
std::map<FormulaId, long long> oracle_values(int k, int n);

struct PointResult {
    std::vector<VerificationRecord> records;   // FormulaId declaration order
    std::vector<PartitionDiff> partition_diffs;
};

PointResult verify_point(int k, int n);

// verify_point over the whole grid (k ascending, then n ascending). Points
// are evaluated concurrently; the report is assembled in grid order and is
// byte-stable across runs. A failure at any point aborts with a diagnostic
// naming (k, n).
VerificationReport verify_grid(int k_min, int k_max, int leaves_min, int leaves_max);

} // namespace zagreb
