#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilgrade/checks.hpp"

namespace nilgrade {

enum class ReportFormat { text, machine };
ReportFormat parse_report_format(const std::string& name);

/// Text: one line per record sorted by (check, spec), witness fields
/// indented below. Machine: {"format": "nilgrade-report/1", "records": [...]}
/// with the same ordering.
std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format);

nlohmann::json to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& record);
std::vector<CheckReport> parse_machine_report(const std::string& text);

}  // namespace nilgrade
