#pragma once

#include <string>
#include <vector>

#include "pgroup/harness.hpp"

namespace pgroup {

enum class ReportFormat { kJson, kCsv, kTable };

/// {"group", "check", "status", "witness", "ms"} in that order; ms is 0 when
/// timing is off.
Json report_json(const CheckReport& r, bool timing);
/// {"summary": {"groups", "reports", "pass", "fail", "skipped"}}
Json summary_json(const Summary& s);

/// One JSON object per line, summary line last.
std::string format_json(const RunResult& run, bool timing);
/// Header row, then one row per report; fields are quoted only when needed.
std::string format_csv(const RunResult& run, bool timing);
std::string format_table(const RunResult& run, bool timing);
std::string format_report(const RunResult& run, ReportFormat format, bool timing);

}  // namespace pgroup
