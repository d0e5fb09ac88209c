#include "nilgrade/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "nilgrade/spec_io.hpp"

namespace nilgrade {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "nilgrade-report/1";

std::vector<const CheckReport*> sorted(const std::vector<CheckReport>& reports) {
  std::vector<const CheckReport*> out;
  for (const auto& r : reports) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const CheckReport* a, const CheckReport* b) {
    return std::tie(a->check, a->spec) < std::tie(b->check, b->spec);
  });
  return out;
}

CheckStatus status_from_string(const std::string& s) {
  for (auto st : {CheckStatus::pass, CheckStatus::fail, CheckStatus::falsified, CheckStatus::skipped_resource})
    if (to_string(st) == s) return st;
  throw SpecError("/status", "unknown status '" + s + "'");
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "machine") return ReportFormat::machine;
  throw SpecError("--format", "expected text or machine, got '" + name + "'");
}

json to_json(const CheckReport& r) {
  json witness = json::array();
  for (const auto& [k, v] : r.witness) witness.push_back({{"field", k}, {"value", v}});
  json rec = {{"spec", r.spec},       {"check", r.check},   {"status", to_string(r.status)},
              {"vacuous", r.vacuous}, {"detail", r.detail}, {"witness", std::move(witness)},
              {"millis", r.millis}};
  rec["expected"] = r.expected ? json(*r.expected) : json(nullptr);
  return rec;
}

CheckReport report_from_json(const json& rec) {
  CheckReport r;
  r.spec = rec.at("spec").get<std::string>();
  r.check = rec.at("check").get<std::string>();
  r.status = status_from_string(rec.at("status").get<std::string>());
  r.vacuous = rec.at("vacuous").get<bool>();
  r.detail = rec.at("detail").get<std::string>();
  r.millis = rec.at("millis").get<double>();
  if (!rec.at("expected").is_null()) r.expected = rec.at("expected").get<bool>();
  for (const auto& w : rec.at("witness")) r.witness.emplace_back(w.at("field").get<std::string>(), w.at("value").get<std::string>());
  return r;
}

std::vector<CheckReport> parse_machine_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("report", e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kFormat) throw SpecError("/format", std::string("expected ") + kFormat);
  std::vector<CheckReport> out;
  try {
    for (const auto& rec : doc.at("records")) out.push_back(report_from_json(rec));
  } catch (const json::exception& e) {
    throw SpecError("/records", e.what());
  }
  return out;
}

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  const auto order = sorted(reports);
  if (format == ReportFormat::machine) {
    json records = json::array();
    for (const auto* r : order) records.push_back(to_json(*r));
    return json{{"format", kFormat}, {"records", std::move(records)}}.dump(2) + "\n";
  }
  std::ostringstream out;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto* r : order) ++counts[static_cast<int>(r->status)];
  out << "# nilgrade report: " << reports.size() << " records, " << counts[0] << " pass, " << counts[1] << " fail, "
      << counts[2] << " falsified, " << counts[3] << " skipped-resource\n";
  for (const auto* r : order) {
    out << r->check << "  " << r->spec << "  " << to_string(r->status);
    if (r->expected) out << " (expected " << (*r->expected ? "true" : "false") << ")";
    if (r->vacuous) out << " [vacuous]";
    // Times are left out on purpose so two runs diff cleanly.
    out << "  " << r->detail << "\n";
    for (const auto& [k, v] : r->witness) out << "    " << k << ": " << v << "\n";
  }
  return out.str();
}

}  // namespace nilgrade
