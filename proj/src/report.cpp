#include "eil/report.hpp"

#include "eil/errors.hpp"

namespace eil {

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw ParameterError("format must be json or csv, got '" + std::string(name) + "'");
}

bool StatsReport::passed() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

void StatsReport::add_check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

Json to_json_value(const StatsReport& r) {
    Json doc = Json::object();
    doc["schema"] = kReportSchema;
    doc["kind"] = r.kind;
    doc["passed"] = r.passed();
    doc["params"] = r.params;
    doc["trials"] = Json::array();
    for (const auto& t : r.trials) doc["trials"].push_back(t);
    doc["groups"] = Json::array();
    for (const auto& g : r.groups) doc["groups"].push_back(g);
    doc["aggregates"] = r.aggregates;
    doc["checks"] = Json::array();
    for (const auto& c : r.checks) doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (r.duration_seconds) doc["duration_seconds"] = *r.duration_seconds;
    return doc;
}

std::string to_json(const StatsReport& r) { return to_json_value(r).dump(2) + '\n'; }

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void emit(std::string& out, std::string_view scope, const std::string& index, const std::string& field,
          const std::string& value) {
    out += scope;
    out += ',';
    out += csv_escape(index);
    out += ',';
    out += csv_escape(field);
    out += ',';
    out += csv_escape(value);
    out += '\n';
}

void flatten(std::string& out, std::string_view scope, const std::string& index, const std::string& prefix,
             const Json& v) {
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) flatten(out, scope, index, prefix.empty() ? key : prefix + '.' + key, child);
    } else if (v.is_array()) {
        bool scalars = true;
        for (const auto& child : v) scalars = scalars && !child.is_structured();
        if (scalars) {
            std::string joined;
            for (const auto& child : v) {
                if (!joined.empty()) joined += ' ';
                joined += scalar_text(child);
            }
            emit(out, scope, index, prefix, joined);
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) flatten(out, scope, index, prefix + '.' + std::to_string(i), v[i]);
        }
    } else {
        emit(out, scope, index, prefix, scalar_text(v));
    }
}

}  // namespace

std::string to_csv(const StatsReport& r) {
    std::string out = "scope,index,field,value\n";
    emit(out, "meta", "", "schema", std::string(kReportSchema));
    emit(out, "meta", "", "kind", r.kind);
    emit(out, "meta", "", "passed", r.passed() ? "true" : "false");
    if (r.duration_seconds) emit(out, "meta", "", "duration_seconds", Json(*r.duration_seconds).dump());
    flatten(out, "param", "", "", r.params);
    for (std::size_t i = 0; i < r.trials.size(); ++i) flatten(out, "trial", std::to_string(i), "", r.trials[i]);
    for (std::size_t i = 0; i < r.groups.size(); ++i) flatten(out, "group", std::to_string(i), "", r.groups[i]);
    flatten(out, "aggregate", "", "", r.aggregates);
    for (const auto& c : r.checks) {
        emit(out, "check", c.name, "passed", c.passed ? "true" : "false");
        emit(out, "check", c.name, "detail", c.detail);
    }
    return out;
}

std::string render(const StatsReport& r, ReportFormat format) {
    return format == ReportFormat::json ? to_json(r) : to_csv(r);
}

std::string validate_report(const Json& doc) {
    if (!doc.is_object()) return "report must be an object";
    const auto require = [&](const char* key, auto pred, const char* what) -> std::string {
        if (!doc.contains(key)) return std::string("missing key '") + key + "'";
        if (!pred(doc[key])) return std::string("'") + key + "' must be " + what;
        return {};
    };
    for (const auto& err : {
             require("schema", [](const Json& v) { return v.is_string() && v.get<std::string>() == kReportSchema; },
                     "\"report-v1\""),
             require("kind", [](const Json& v) {
                 if (!v.is_string()) return false;
                 const auto k = v.get<std::string>();
                 return k == "incidence" || k == "furedi" || k == "verify" || k == "montecarlo" || k == "sweep";
             }, "one of incidence|furedi|verify|montecarlo|sweep"),
             require("passed", [](const Json& v) { return v.is_boolean(); }, "a boolean"),
             require("params", [](const Json& v) { return v.is_object(); }, "an object"),
             require("trials", [](const Json& v) { return v.is_array(); }, "an array"),
             require("groups", [](const Json& v) { return v.is_array(); }, "an array"),
             require("aggregates", [](const Json& v) { return v.is_object(); }, "an object"),
             require("checks", [](const Json& v) { return v.is_array(); }, "an array"),
         }) {
        if (!err.empty()) return err;
    }
    for (const auto& t : doc["trials"]) {
        if (!t.is_object()) return "trial records must be objects";
        for (const auto& [key, value] : t.items()) {
            if (key.ends_with("_free") && value.is_boolean() && !value.get<bool>() && !t.contains(key + "_witness")) {
                return "failed check '" + key + "' has no witness";
            }
        }
    }
    for (const auto& g : doc["groups"]) {
        if (!g.is_object()) return "group records must be objects";
    }
    bool all = true;
    for (const auto& c : doc["checks"]) {
        if (!c.is_object() || !c.contains("name") || !c["name"].is_string() || !c.contains("passed") ||
            !c["passed"].is_boolean() || !c.contains("detail") || !c["detail"].is_string()) {
            return "checks must be {name: string, passed: bool, detail: string}";
        }
        all = all && c["passed"].get<bool>();
    }
    if (all != doc["passed"].get<bool>()) return "'passed' disagrees with the checks";
    if (doc.contains("duration_seconds") && !doc["duration_seconds"].is_number()) return "'duration_seconds' must be a number";
    return {};
}

}  // namespace eil
