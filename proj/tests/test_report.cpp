#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "eil/experiment.hpp"
#include "eil/incidence.hpp"

using namespace eil;

namespace {

using Cells = std::map<std::string, std::string>;

// RFC 4180 records; quoted fields may hold commas, quotes and newlines.
std::vector<std::vector<std::string>> csv_records(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row(1);
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                row.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                row.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.emplace_back();
        } else if (c == '\n') {
            rows.push_back(std::move(row));
            row.assign(1, {});
        } else {
            row.back() += c;
        }
    }
    CHECK(row.size() == 1);
    CHECK(row[0].empty());
    return rows;
}

Cells read_csv(const std::string& text) {
    const auto rows = csv_records(text);
    REQUIRE(!rows.empty());
    CHECK(rows[0] == std::vector<std::string>{"scope", "index", "field", "value"});
    Cells cells;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& f = rows[i];
        REQUIRE(f.size() == 4);
        const std::string key = f[0] + "|" + f[1] + "|" + f[2];
        CHECK(cells.count(key) == 0);
        cells[key] = f[3];
    }
    return cells;
}

bool same_scalar(const Json& v, const std::string& cell) {
    if (v.is_string()) return v.get<std::string>() == cell;
    return Json::parse(cell) == v;
}

// Walks the JSON document and checks each leaf against its CSV cell; returns the leaf count.
std::size_t compare(const Json& v, const std::string& scope, const std::string& index, const std::string& field,
                    const Cells& cells) {
    if (v.is_object()) {
        std::size_t n = 0;
        for (const auto& [k, sub] : v.items()) n += compare(sub, scope, index, field.empty() ? k : field + "." + k, cells);
        return n;
    }
    const auto it = cells.find(scope + "|" + index + "|" + field);
    REQUIRE_MESSAGE(it != cells.end(), scope << "|" << index << "|" << field);
    if (v.is_array()) {
        std::istringstream parts(it->second);
        std::string part;
        std::size_t i = 0;
        while (parts >> part) {
            REQUIRE(i < v.size());
            CHECK(same_scalar(v[i++], part));
        }
        CHECK(i == v.size());
    } else {
        CHECK_MESSAGE(same_scalar(v, it->second), field);
    }
    return 1;
}

void check_csv_matches_json(const StatsReport& r) {
    const Json doc = to_json_value(r);
    const Cells cells = read_csv(to_csv(r));
    std::size_t leaves = 3;
    CHECK(cells.at("meta||schema") == doc["schema"]);
    CHECK(cells.at("meta||kind") == doc["kind"]);
    CHECK(cells.at("meta||passed") == doc["passed"].dump());
    if (doc.contains("duration_seconds")) {
        CHECK(same_scalar(doc["duration_seconds"], cells.at("meta||duration_seconds")));
        ++leaves;
    }
    leaves += compare(doc["params"], "param", "", "", cells);
    for (std::size_t i = 0; i < doc["trials"].size(); ++i) leaves += compare(doc["trials"][i], "trial", std::to_string(i), "", cells);
    for (std::size_t i = 0; i < doc["groups"].size(); ++i) leaves += compare(doc["groups"][i], "group", std::to_string(i), "", cells);
    leaves += compare(doc["aggregates"], "aggregate", "", "", cells);
    for (const auto& c : doc["checks"]) {
        CHECK(cells.at("check|" + c["name"].get<std::string>() + "|passed") == c["passed"].dump());
        CHECK(cells.at("check|" + c["name"].get<std::string>() + "|detail") == c["detail"]);
        leaves += 2;
    }
    CHECK(leaves == cells.size());
}

RunConfig mc_config(unsigned workers) {
    RunConfig cfg;
    cfg.q = 5;
    cfg.t = 3;
    cfg.seed = 8;
    cfg.trials = 120;
    cfg.workers = workers;
    return cfg;
}

}  // namespace

TEST_CASE("report format names") {
    CHECK(parse_report_format("json") == ReportFormat::json);
    CHECK(parse_report_format("csv") == ReportFormat::csv);
    CHECK_THROWS_AS(parse_report_format("xml"), ParameterError);
}

TEST_CASE("CSV and JSON agree field by field") {
    const StatsReport mc = run_montecarlo(mc_config(1));
    check_csv_matches_json(mc);

    RunConfig cfg;
    cfg.qs = {5, 7};
    cfg.t = 3;
    cfg.trials = 4;
    check_csv_matches_json(run_sweep(cfg));

    cfg.q = 7;
    check_csv_matches_json(construct_furedi(cfg).report);
    check_csv_matches_json(construct_incidence(cfg).report);

    StatsReport odd;
    odd.kind = "verify";
    odd.params = {{"note", "comma, \"quoted\"\nand newline"}};
    odd.trials.push_back({{"ksm_free", false}, {"ksm_free_witness", {{"subset", {0, 1}}, {"common", {2, 3, 4}}}}});
    odd.add_check("ksm_free", false, "a, b");
    odd.duration_seconds = 0.5;
    check_csv_matches_json(odd);
    CHECK(read_csv(to_csv(odd)).at("meta||duration_seconds") == "0.5");
}

TEST_CASE("validate_report") {
    const Json good = to_json_value(run_montecarlo(mc_config(1)));
    CHECK(validate_report(good) == "");
    CHECK(good["schema"] == "report-v1");

    Json bad = good;
    bad["schema"] = "report-v2";
    CHECK_FALSE(validate_report(bad).empty());
    bad = good;
    bad.erase("aggregates");
    CHECK_FALSE(validate_report(bad).empty());
    bad = good;
    bad["kind"] = "other";
    CHECK_FALSE(validate_report(bad).empty());
    bad = good;
    bad["passed"] = !good["passed"].get<bool>();
    CHECK_FALSE(validate_report(bad).empty());
    bad = good;
    bad["trials"][0]["x_free"] = false;
    CHECK_FALSE(validate_report(bad).empty());
    bad["trials"][0]["x_free_witness"] = {{"subset", {1}}, {"common", {2}}};
    CHECK(validate_report(bad).empty());
    CHECK_FALSE(validate_report(Json::array()).empty());
}

TEST_CASE("montecarlo report contents") {
    RunConfig cfg = mc_config(1);
    cfg.q = 7;
    const StatsReport r = run_montecarlo(cfg);
    CHECK(r.kind == "montecarlo");
    CHECK(r.trials.size() == 120);
    CHECK(r.params["reference_line"] == montecarlo_reference_line());
    const auto& agg = r.aggregates;
    CHECK(agg["exact_t"]["target"].get<double>() == doctest::Approx(30.0 / 343));
    CHECK(agg["binomial_mean"]["target"].get<double>() == doctest::Approx(35.0 / 343));

    // Aggregates are recomputable from the trial records.
    double hits = 0;
    for (const auto& t : r.trials) hits += t["on_line_x0"].get<std::uint64_t>() == 3;
    CHECK(agg["exact_t"]["estimate"].get<double>() == doctest::Approx(hits / 120));
}

TEST_CASE("worker count does not change results") {
    CHECK(to_json(run_montecarlo(mc_config(1))) == to_json(run_montecarlo(mc_config(4))));

    RunConfig cfg;
    cfg.qs = {5, 7};
    cfg.t = 3;
    cfg.trials = 6;
    cfg.workers = 1;
    const std::string one = to_csv(run_sweep(cfg));
    cfg.workers = 3;
    CHECK(one == to_csv(run_sweep(cfg)));

    cfg.q = 11;
    cfg.seed = 5;
    const auto a = construct_incidence(cfg);
    cfg.workers = 1;
    const auto b = construct_incidence(cfg);
    CHECK(serialize_graph(a.graph) == serialize_graph(b.graph));
    CHECK(to_json(a.report) == to_json(b.report));
    REQUIRE(a.sidecars.size() == b.sidecars.size());
    for (std::size_t i = 0; i < a.sidecars.size(); ++i) CHECK(a.sidecars[i].content == b.sidecars[i].content);
}

TEST_CASE("config validation") {
    RunConfig cfg = mc_config(1);
    cfg.trials = 10;
    CHECK_THROWS_WITH_AS(run_montecarlo(cfg), doctest::Contains("trials must be >= 100"), ParameterError);

    RunConfig sweep;
    sweep.qs = {7};
    sweep.t = 3;
    CHECK_THROWS_AS(run_sweep(sweep), ParameterError);
    sweep.qs = {7, 9};
    CHECK_THROWS_AS(run_sweep(sweep), ParameterError);

    RunConfig c;
    c.q = 4;
    c.t = 3;
    CHECK_THROWS_WITH_AS(construct_incidence(c), doctest::Contains("q must be prime"), ParameterError);
    c.q = 7;
    c.t = 4;
    CHECK_THROWS_AS(construct_furedi(c), ParameterError);
    c.t = 2;
    CHECK_THROWS_AS(construct_incidence(c), ParameterError);
    c.t = 3;
    c.seed_y = c.seed;
    CHECK_THROWS_AS(construct_incidence(c), ParameterError);
}

TEST_CASE("verify driver") {
    BitGraph k23 = BitGraph::bipartite(2, 3);
    for (std::uint32_t u = 0; u < 2; ++u)
        for (std::uint32_t v = 2; v < 5; ++v) k23.add_edge(u, v);
    const StatsReport r = run_verify(k23, 2, 3);
    CHECK_FALSE(r.passed());
    CHECK(r.trials.at(0)["ksm_free"] == false);
    CHECK(r.trials.at(0).contains("ksm_free_witness"));
    CHECK(validate_report(to_json_value(r)).empty());
    CHECK(run_verify(k23, 2, 4).passed());
}

TEST_CASE("least_squares_slope") {
    const std::vector<double> xs{std::log(2.0), std::log(3.0), std::log(5.0)};
    std::vector<double> ys;
    for (const double x : xs) ys.push_back(4 * x + 1);
    CHECK(least_squares_slope(xs, ys) == doctest::Approx(4.0));
    CHECK_THROWS_AS(least_squares_slope({1.0}, {1.0}), ParameterError);
    CHECK_THROWS_AS(least_squares_slope({1.0, 1.0}, {1.0, 2.0}), ParameterError);
}
