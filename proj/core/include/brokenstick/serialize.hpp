#pragma once

#include "brokenstick/fractal.hpp"
#include "brokenstick/montecarlo.hpp"
#include "brokenstick/probability.hpp"

#include <string>
#include <vector>

namespace brokenstick {

// JSON documents with exact values as "p/q" strings (integers as "n").
// Field order is fixed, so identical inputs serialize to identical bytes.
std::string to_json(const FractalApprox& a);
std::string to_json(const AuditReport& r);
std::string to_json(const ProbabilityReport& r);
// JSON array, one element per report (paper and measured side by side).
std::string to_json(const std::vector<ProbabilityReport>& reports);
std::string to_json(const EstimateRecord& r);

// CSV, one row per piece.
std::string to_csv(const AuditReport& r);
// CSV delta table, one row per (mode, index); one header for all reports.
std::string delta_table_csv(const ProbabilityReport& r);
std::string delta_table_csv(const std::vector<ProbabilityReport>& reports);

const char* mode_name(Mode mode);

}  // namespace brokenstick
