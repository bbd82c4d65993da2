#include "eil/eil.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "eil/evasive.hpp"
#include "eil/experiment.hpp"
#include "eil/subgraph.hpp"

struct eil_graph {
    eil::BitGraph graph;
};

struct eil_report {
    eil::StatsReport report;
};

struct eil_construction {
    eil_graph graph;
    eil_report report;
    std::vector<eil::Artifact> sidecars;
};

namespace {

thread_local std::string g_last_error;

eil_status fail(eil_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Maps the C++ exception hierarchy onto status codes at the ABI boundary.
template <class Fn>
eil_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return EIL_OK;
    } catch (const eil::ParseError& e) {
        return fail(EIL_ERR_PARSE, e.what());
    } catch (const eil::ParameterError& e) {
        return fail(EIL_ERR_PARAMETER, e.what());
    } catch (const eil::DomainError& e) {
        return fail(EIL_ERR_DOMAIN, e.what());
    } catch (const eil::LimitError& e) {
        return fail(EIL_ERR_LIMIT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EIL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(EIL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(EIL_ERR_INTERNAL, "unknown error");
    }
}

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

eil::RunConfig config_from(const eil_options* opts) {
    eil::RunConfig cfg;
    cfg.workers = opts && opts->workers ? opts->workers : eil::default_workers();
    cfg.force = opts && opts->force;
    cfg.timing = opts && opts->timing;
    return cfg;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

void write_file(const char* path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError(std::string("cannot open '") + path + "' for writing");
    f << content;
    if (!f) throw IoError(std::string("write to '") + path + "' failed");
}

eil_status null_argument() { return fail(EIL_ERR_PARAMETER, "null argument"); }

}  // namespace

extern "C" {

const char* eil_version(void) { return "1.0.0"; }

const char* eil_last_error(void) { return g_last_error.c_str(); }

const char* eil_status_name(eil_status status) {
    switch (status) {
        case EIL_OK: return "ok";
        case EIL_ERR_PARAMETER: return "parameter error";
        case EIL_ERR_DOMAIN: return "domain error";
        case EIL_ERR_LIMIT: return "limit exceeded";
        case EIL_ERR_PARSE: return "parse error";
        case EIL_ERR_IO: return "i/o error";
        case EIL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void eil_string_free(char* s) { std::free(s); }

eil_status eil_construct_incidence(uint32_t q, uint32_t t, uint64_t seed_x, const uint64_t* seed_y,
                                   const eil_options* opts, eil_construction** out) {
    if (!out) return null_argument();
    return guarded([&] {
        eil::RunConfig cfg = config_from(opts);
        cfg.q = q;
        cfg.t = t;
        cfg.seed = seed_x;
        if (seed_y) cfg.seed_y = *seed_y;
        auto res = eil::construct_incidence(cfg);
        *out = new eil_construction{{std::move(res.graph)}, {std::move(res.report)}, std::move(res.sidecars)};
    });
}

eil_status eil_construct_furedi(uint32_t q, uint32_t t, const eil_options* opts, eil_construction** out) {
    if (!out) return null_argument();
    return guarded([&] {
        eil::RunConfig cfg = config_from(opts);
        cfg.q = q;
        cfg.t = t;
        auto res = eil::construct_furedi(cfg);
        *out = new eil_construction{{std::move(res.graph)}, {std::move(res.report)}, std::move(res.sidecars)};
    });
}

void eil_construction_free(eil_construction* c) { delete c; }

const eil_graph* eil_construction_graph(const eil_construction* c) { return c ? &c->graph : nullptr; }

const eil_report* eil_construction_report(const eil_construction* c) { return c ? &c->report : nullptr; }

size_t eil_construction_sidecar_count(const eil_construction* c) { return c ? c->sidecars.size() : 0; }

eil_status eil_construction_sidecar(const eil_construction* c, size_t index, const char** suffix, const char** content) {
    if (!c || !suffix || !content) return null_argument();
    if (index >= c->sidecars.size()) return fail(EIL_ERR_PARAMETER, "sidecar index out of range");
    *suffix = c->sidecars[index].suffix.c_str();
    *content = c->sidecars[index].content.c_str();
    return EIL_OK;
}

eil_status eil_graph_parse(const char* text, size_t length, eil_graph** out) {
    if (!text || !out) return null_argument();
    return guarded([&] { *out = new eil_graph{eil::parse_graph(std::string_view(text, length))}; });
}

eil_status eil_graph_load(const char* path, eil_graph** out) {
    if (!path || !out) return null_argument();
    std::ifstream f(path, std::ios::binary);
    if (!f) return fail(EIL_ERR_IO, (std::string("cannot open '") + path + "'").c_str());
    std::ostringstream buf;
    buf << f.rdbuf();
    if (f.bad()) return fail(EIL_ERR_IO, (std::string("read from '") + path + "' failed").c_str());
    const std::string text = buf.str();
    return guarded([&] { *out = new eil_graph{eil::parse_graph(text)}; });
}

eil_status eil_graph_serialize(const eil_graph* g, char** out) {
    if (!g || !out) return null_argument();
    return guarded([&] { *out = dup_string(eil::serialize_graph(g->graph)); });
}

eil_status eil_graph_save(const eil_graph* g, const char* path) {
    if (!g || !path) return null_argument();
    try {
        write_file(path, eil::serialize_graph(g->graph));
        return EIL_OK;
    } catch (const IoError& e) {
        return fail(EIL_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(EIL_ERR_INTERNAL, e.what());
    }
}

void eil_graph_free(eil_graph* g) { delete g; }

uint32_t eil_graph_vertex_count(const eil_graph* g) { return g ? g->graph.vertex_count() : 0; }

uint64_t eil_graph_edge_count(const eil_graph* g) { return g ? g->graph.edge_count() : 0; }

int eil_graph_is_bipartite(const eil_graph* g) { return g && g->graph.is_bipartite() ? 1 : 0; }

eil_status eil_graph_count_biclique(const eil_graph* g, uint32_t a, uint32_t b, uint64_t* out) {
    if (!g || !out) return null_argument();
    return guarded([&] {
        *out = g->graph.is_bipartite() ? eil::count_biclique(g->graph, a, b) : eil::count_biclique_general(g->graph, a, b);
    });
}

eil_status eil_verify(const eil_graph* g, uint32_t s, uint32_t m, const eil_options* opts, eil_report** out) {
    if (!g || !out) return null_argument();
    return guarded([&] {
        const eil::RunConfig cfg = config_from(opts);
        *out = new eil_report{eil::run_verify(g->graph, s, m, cfg.force)};
    });
}

eil_status eil_montecarlo(uint32_t q, uint32_t t, uint64_t seed, uint32_t trials, const eil_options* opts,
                          eil_report** out) {
    if (!out) return null_argument();
    return guarded([&] {
        eil::RunConfig cfg = config_from(opts);
        cfg.q = q;
        cfg.t = t;
        cfg.seed = seed;
        cfg.trials = trials;
        *out = new eil_report{eil::run_montecarlo(cfg)};
    });
}

eil_status eil_sweep(const uint32_t* qs, size_t q_count, uint32_t t, uint64_t seed, uint32_t trials,
                     const eil_options* opts, eil_report** out) {
    if (!out || (!qs && q_count > 0)) return null_argument();
    return guarded([&] {
        eil::RunConfig cfg = config_from(opts);
        cfg.qs.assign(qs, qs + q_count);
        cfg.t = t;
        cfg.seed = seed;
        cfg.trials = trials;
        *out = new eil_report{eil::run_sweep(cfg)};
    });
}

eil_status eil_exact_probabilities(uint32_t q, uint32_t t, double out[3]) {
    if (!out) return null_argument();
    return guarded([&] {
        const auto p = eil::exact_probabilities(q, t);
        out[0] = p.p_vanish;
        out[1] = p.p_exact_t;
        out[2] = p.e_binom;
    });
}

eil_status eil_report_render(const eil_report* r, eil_format format, char** out) {
    if (!r || !out) return null_argument();
    return guarded([&] {
        *out = dup_string(eil::render(r->report, format == EIL_FORMAT_CSV ? eil::ReportFormat::csv : eil::ReportFormat::json));
    });
}

eil_status eil_report_save(const eil_report* r, eil_format format, const char* path) {
    if (!r || !path) return null_argument();
    try {
        write_file(path, eil::render(r->report, format == EIL_FORMAT_CSV ? eil::ReportFormat::csv : eil::ReportFormat::json));
        return EIL_OK;
    } catch (const IoError& e) {
        return fail(EIL_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(EIL_ERR_INTERNAL, e.what());
    }
}

int eil_report_passed(const eil_report* r) { return r && r->report.passed() ? 1 : 0; }

void eil_report_free(eil_report* r) { delete r; }

}  // extern "C"
