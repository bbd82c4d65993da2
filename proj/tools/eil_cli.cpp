// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eil/eil.h"

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kCheckFailed = 2, kIo = 3 };

struct Common {
    std::uint32_t q = 0;
    std::uint32_t t = 3;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> seed_y;
    std::uint32_t trials = 100;
    std::string out;
    std::string format = "json";
    std::uint32_t workers = 0;
    bool force = false;
    bool timing = false;
};

struct ReportDeleter {
    void operator()(eil_report* r) const { eil_report_free(r); }
};
struct GraphDeleter {
    void operator()(eil_graph* g) const { eil_graph_free(g); }
};
struct ConstructionDeleter {
    void operator()(eil_construction* c) const { eil_construction_free(c); }
};

int exit_for(eil_status st) {
    std::cerr << "error: " << eil_last_error() << '\n';
    switch (st) {
        case EIL_ERR_PARSE:
        case EIL_ERR_IO:
        case EIL_ERR_INTERNAL:
            return kIo;
        default:
            return kValidation;
    }
}

eil_options options_of(const Common& c) {
    return eil_options{c.workers, c.force ? 1 : 0, c.timing ? 1 : 0};
}

eil_format format_of(const Common& c) { return c.format == "csv" ? EIL_FORMAT_CSV : EIL_FORMAT_JSON; }

// Writes the report to `path`, or stdout when path is empty; exit 2 if a check failed.
int emit_report(const eil_report* report, const Common& c, const std::string& path) {
    if (path.empty()) {
        char* text = nullptr;
        if (const eil_status st = eil_report_render(report, format_of(c), &text); st != EIL_OK) return exit_for(st);
        std::fputs(text, stdout);
        eil_string_free(text);
    } else if (const eil_status st = eil_report_save(report, format_of(c), path.c_str()); st != EIL_OK) {
        return exit_for(st);
    }
    return eil_report_passed(report) ? kOk : kCheckFailed;
}

bool write_text(const std::string& path, const char* content) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return false;
    const bool ok = std::fputs(content, f) >= 0;
    return std::fclose(f) == 0 && ok;
}

int run_construct(const std::string& kind, const Common& c) {
    const eil_options opts = options_of(c);
    eil_construction* raw = nullptr;
    eil_status st = EIL_OK;
    if (kind == "incidence") {
        st = eil_construct_incidence(c.q, c.t, c.seed, c.seed_y ? &*c.seed_y : nullptr, &opts, &raw);
    } else {
        st = eil_construct_furedi(c.q, c.t, &opts, &raw);
    }
    if (st != EIL_OK) return exit_for(st);
    std::unique_ptr<eil_construction, ConstructionDeleter> built(raw);

    const std::string graph_path =
        c.out.empty() ? kind + "-q" + std::to_string(c.q) + "-t" + std::to_string(c.t) + ".graph" : c.out;
    if (const eil_status ws = eil_graph_save(eil_construction_graph(built.get()), graph_path.c_str()); ws != EIL_OK) {
        return exit_for(ws);
    }
    for (std::size_t i = 0; i < eil_construction_sidecar_count(built.get()); ++i) {
        const char* suffix = nullptr;
        const char* content = nullptr;
        eil_construction_sidecar(built.get(), i, &suffix, &content);
        if (!write_text(graph_path + suffix, content)) {
            std::cerr << "error: cannot write '" << graph_path << suffix << "'\n";
            return kIo;
        }
    }
    const std::string report_path = graph_path + ".report." + (c.format == "csv" ? "csv" : "json");
    const int code = emit_report(eil_construction_report(built.get()), c, report_path);
    if (code != kIo) {
        std::cerr << "wrote " << graph_path << " (" << eil_graph_vertex_count(eil_construction_graph(built.get()))
                  << " vertices, " << eil_graph_edge_count(eil_construction_graph(built.get())) << " edges) and "
                  << report_path << '\n';
    }
    return code;
}

int run_verify(const std::string& path, std::uint32_t s, std::uint32_t m, const Common& c) {
    eil_graph* raw = nullptr;
    if (const eil_status st = eil_graph_load(path.c_str(), &raw); st != EIL_OK) return exit_for(st);
    std::unique_ptr<eil_graph, GraphDeleter> graph(raw);
    const eil_options opts = options_of(c);
    eil_report* rep = nullptr;
    if (const eil_status st = eil_verify(graph.get(), s, m, &opts, &rep); st != EIL_OK) return exit_for(st);
    std::unique_ptr<eil_report, ReportDeleter> report(rep);
    return emit_report(report.get(), c, c.out);
}

int run_montecarlo(const Common& c) {
    const eil_options opts = options_of(c);
    eil_report* rep = nullptr;
    if (const eil_status st = eil_montecarlo(c.q, c.t, c.seed, c.trials, &opts, &rep); st != EIL_OK) return exit_for(st);
    std::unique_ptr<eil_report, ReportDeleter> report(rep);
    return emit_report(report.get(), c, c.out);
}

int run_sweep(const std::vector<std::uint32_t>& qs, const Common& c) {
    const eil_options opts = options_of(c);
    eil_report* rep = nullptr;
    if (const eil_status st = eil_sweep(qs.data(), qs.size(), c.t, c.seed, c.trials, &opts, &rep); st != EIL_OK) {
        return exit_for(st);
    }
    std::unique_ptr<eil_report, ReportDeleter> report(rep);
    return emit_report(report.get(), c, c.out);
}

void add_output_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "Output path (report; for construct, the graph file)");
    cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--workers", c.workers, "Worker threads (default: EIL_WORKERS or 1)");
    cmd->add_flag("--force", c.force, "Allow triple scans on graphs above the size guard");
    cmd->add_flag("--timing", c.timing, "Record wall-clock duration in the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subspace-evasive incidence graphs and Fueredi graphs: construction and verification"};
    app.set_version_flag("--version", std::string(eil_version()));
    app.require_subcommand(1);

    Common common;

    std::string kind;
    auto* construct = app.add_subcommand("construct", "Build a graph, verify it, and write graph + sidecars + report");
    construct->add_option("kind", kind, "incidence | furedi")->required()->check(CLI::IsMember({"incidence", "furedi"}));
    construct->add_option("--q", common.q, "Prime field size")->required();
    construct->add_option("--t", common.t, "Line load t (incidence) or subgroup order t (furedi)")->required();
    construct->add_option("--seed", common.seed, "Seed of the X polynomial");
    construct->add_option("--seed-y", common.seed_y, "Seed of the Y polynomial (default: derived from --seed)");
    add_output_flags(construct, common);

    std::string graph_path;
    std::uint32_t s = 2, m = 3;
    auto* verify = app.add_subcommand("verify", "Check a graph file for K_{s,m}-freeness");
    verify->add_option("graph", graph_path, "Graph file")->required();
    verify->add_option("--s", s, "Size of the small side")->required();
    verify->add_option("--m", m, "Number of common neighbors")->required();
    add_output_flags(verify, common);

    auto* montecarlo = app.add_subcommand("montecarlo", "Line statistics of random zero sets against exact targets");
    montecarlo->add_option("--q", common.q, "Prime field size")->required();
    montecarlo->add_option("--t", common.t, "Degree bound t")->required();
    montecarlo->add_option("--seed", common.seed, "Base seed; trial i uses seed + i");
    montecarlo->add_option("--trials", common.trials, "Number of trials (>= 100)");
    add_output_flags(montecarlo, common);

    std::vector<std::uint32_t> qs;
    auto* sweep = app.add_subcommand("sweep", "Mean K_{t,t} counts of incidence graphs across several q");
    sweep->add_option("--q", qs, "Prime field sizes (repeat or comma-separate)")->required()->delimiter(',');
    sweep->add_option("--t", common.t, "Line load t")->required();
    sweep->add_option("--seed", common.seed, "Base seed; trial i uses seed + i");
    sweep->add_option("--trials", common.trials, "Trials per q");
    add_output_flags(sweep, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    if (*construct) return run_construct(kind, common);
    if (*verify) return run_verify(graph_path, s, m, common);
    if (*montecarlo) return run_montecarlo(common);
    return run_sweep(qs, common);
}
