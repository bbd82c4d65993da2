#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace eil {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "report-v1";

enum class ReportFormat { json, csv };

/// Throws ParameterError for anything but "json" / "csv".
ReportFormat parse_report_format(std::string_view name);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Serializable record of one experiment.
///
/// `trials` holds one flat record per trial in trial order, `groups` holds
/// per-parameter aggregates (e.g. one row per q in a sweep) and `aggregates`
/// the run-level summary. Failed freeness checks carry their witness inside
/// the trial record.
struct StatsReport {
    std::string kind;
    Json params = Json::object();
    std::vector<Json> trials;
    std::vector<Json> groups;
    Json aggregates = Json::object();
    std::vector<Check> checks;
    std::optional<double> duration_seconds;

    bool passed() const noexcept;
    void add_check(std::string name, bool passed, std::string detail = {});
};

Json to_json_value(const StatsReport& r);
std::string to_json(const StatsReport& r);

/// Long format: header "scope,index,field,value", one row per scalar.
/// Nested objects flatten to dotted field names; arrays of scalars join with spaces.
std::string to_csv(const StatsReport& r);

std::string render(const StatsReport& r, ReportFormat format);

/// Structural validation against the report-v1 schema. Returns an empty
/// string when valid, otherwise the first violation.
std::string validate_report(const Json& doc);

}  // namespace eil
