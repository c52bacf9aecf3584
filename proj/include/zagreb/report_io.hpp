#pragma once

#include "zagreb/indices.hpp"
#include "zagreb/verify.hpp"

#include <string>

namespace zagreb {

enum class ReportFormat { CSV, JSON };

// Serializes a verification report. Output is byte-identical for equal
// reports.
//
// CSV: header "k,n,formula,formula_value,oracle_value,verdict", one row per
// scalar record, then per-bucket partition rows carrying a trailing
// "partition" sentinel column; the bucket key rides in the formula column,
// e.g. "LCS_EDGE_PARTITION[4-5]" (":literal" marks the alternative
// reading).
//
// JSON mirrors the VerificationReport structure.
std::string emit_report(const VerificationReport &report, ReportFormat fmt);

// JSON rendering of a per-graph index report (used by the CLI).
std::string emit_index_report(const IndexReport &report);

} // namespace zagreb
