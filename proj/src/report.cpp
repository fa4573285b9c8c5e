#include "pgroup/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pgroup {

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string ms_text(const CheckReport& r, bool timing) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << (timing ? r.ms : 0.0);
  return o.str();
}

}  // namespace

Json report_json(const CheckReport& r, bool timing) {
  Json j;
  j["group"] = r.group;
  j["check"] = to_string(r.check);
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["ms"] = timing ? r.ms : 0.0;
  return j;
}

Json summary_json(const Summary& s) {
  Json inner;
  inner["groups"] = s.groups;
  inner["reports"] = s.reports;
  inner["pass"] = s.pass;
  inner["fail"] = s.fail;
  inner["skipped"] = s.skipped;
  Json j;
  j["summary"] = std::move(inner);
  return j;
}

std::string format_json(const RunResult& run, bool timing) {
  std::string out;
  for (const auto& r : run.reports) out += report_json(r, timing).dump() + '\n';
  out += summary_json(run.summary).dump() + '\n';
  return out;
}

std::string format_csv(const RunResult& run, bool timing) {
  std::string out = "group,check,status,ms,witness\n";
  for (const auto& r : run.reports)
    out += csv_quote(r.group) + ',' + to_string(r.check) + ',' + to_string(r.status) + ',' +
           ms_text(r, timing) + ',' + csv_quote(r.witness.dump()) + '\n';
  return out;
}

std::string format_table(const RunResult& run, bool timing) {
  std::size_t gw = 5, cw = 5;
  for (const auto& r : run.reports) {
    gw = std::max(gw, r.group.size());
    cw = std::max(cw, std::string(to_string(r.check)).size());
  }
  std::ostringstream o;
  o << std::left << std::setw(static_cast<int>(gw)) << "group" << "  " << std::setw(static_cast<int>(cw))
    << "check" << "  " << std::setw(7) << "status" << "  " << std::right << std::setw(10) << "ms" << '\n';
  for (const auto& r : run.reports) {
    o << std::left << std::setw(static_cast<int>(gw)) << r.group << "  " << std::setw(static_cast<int>(cw))
      << to_string(r.check) << "  " << std::setw(7) << to_string(r.status) << "  " << std::right
      << std::setw(10) << ms_text(r, timing);
    if (r.status == Status::kSkipped && r.witness.contains("reason"))
      o << "  " << r.witness["reason"].get<std::string>();
    o << '\n';
  }
  const Summary& s = run.summary;
  o << "\n" << s.groups << " groups, " << s.reports << " reports: " << s.pass << " pass, " << s.fail
    << " fail, " << s.skipped << " skipped\n";
  return o.str();
}

std::string format_report(const RunResult& run, ReportFormat format, bool timing) {
  switch (format) {
    case ReportFormat::kJson: return format_json(run, timing);
    case ReportFormat::kCsv: return format_csv(run, timing);
    case ReportFormat::kTable: return format_table(run, timing);
  }
  return {};
}

}  // namespace pgroup
