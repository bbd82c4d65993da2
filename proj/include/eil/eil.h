/*
 * C interface to the evasive-incidence library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Every fallible call returns an eil_status;
 * on failure eil_last_error() describes the problem (per thread, valid until
 * the next failing call on that thread). Strings returned through char**
 * out-parameters are owned by the caller and released with eil_string_free.
 */
#ifndef EIL_EIL_H
#define EIL_EIL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EIL_BUILDING_LIBRARY)
#    define EIL_API __declspec(dllexport)
#  else
#    define EIL_API __declspec(dllimport)
#  endif
#else
#  define EIL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eil_status {
    EIL_OK = 0,
    EIL_ERR_PARAMETER = 1, /* violated precondition on an input parameter */
    EIL_ERR_DOMAIN = 2,    /* mathematically undefined request */
    EIL_ERR_LIMIT = 3,     /* brute-force scan above the size guard without force */
    EIL_ERR_PARSE = 4,     /* malformed input text; message carries the line number */
    EIL_ERR_IO = 5,        /* file could not be read or written */
    EIL_ERR_INTERNAL = 6
} eil_status;

typedef enum eil_format { EIL_FORMAT_JSON = 0, EIL_FORMAT_CSV = 1 } eil_format;

typedef struct eil_graph eil_graph;
typedef struct eil_report eil_report;
typedef struct eil_construction eil_construction;

typedef struct eil_options {
    uint32_t workers; /* 0 = EIL_WORKERS or 1 */
    int force;        /* allow triple scans above the size guard */
    int timing;       /* record wall-clock duration in reports */
} eil_options;

EIL_API const char* eil_version(void);
EIL_API const char* eil_last_error(void);
EIL_API const char* eil_status_name(eil_status status);
EIL_API void eil_string_free(char* s);

/* ---- constructions ------------------------------------------------------ */

/* Point-plane incidence graph of two independent evasive sets in F_q^3.
 * seed_y == NULL derives the Y seed from seed_x. */
EIL_API eil_status eil_construct_incidence(uint32_t q, uint32_t t, uint64_t seed_x, const uint64_t* seed_y,
                                           const eil_options* opts, eil_construction** out);

/* Fueredi graph G_t(q); t >= 2 must divide q-1. */
EIL_API eil_status eil_construct_furedi(uint32_t q, uint32_t t, const eil_options* opts, eil_construction** out);

EIL_API void eil_construction_free(eil_construction* c);

/* Borrowed handles, valid while the construction lives. */
EIL_API const eil_graph* eil_construction_graph(const eil_construction* c);
EIL_API const eil_report* eil_construction_report(const eil_construction* c);

/* Sidecar files written next to the graph file as <graph path><suffix>. */
EIL_API size_t eil_construction_sidecar_count(const eil_construction* c);
EIL_API eil_status eil_construction_sidecar(const eil_construction* c, size_t index, const char** suffix,
                                            const char** content);

/* ---- graphs ------------------------------------------------------------- */

EIL_API eil_status eil_graph_parse(const char* text, size_t length, eil_graph** out);
EIL_API eil_status eil_graph_load(const char* path, eil_graph** out);
EIL_API eil_status eil_graph_serialize(const eil_graph* g, char** out);
EIL_API eil_status eil_graph_save(const eil_graph* g, const char* path);
EIL_API void eil_graph_free(eil_graph* g);

EIL_API uint32_t eil_graph_vertex_count(const eil_graph* g);
EIL_API uint64_t eil_graph_edge_count(const eil_graph* g);
EIL_API int eil_graph_is_bipartite(const eil_graph* g);

/* Counts (A, B) with |A| = a on the left, |B| = b on the right (bipartite graphs)
 * or unordered disjoint {A, B} (general graphs). */
EIL_API eil_status eil_graph_count_biclique(const eil_graph* g, uint32_t a, uint32_t b, uint64_t* out);

/* K_{s,m}-freeness with witness, as a report of kind "verify". */
EIL_API eil_status eil_verify(const eil_graph* g, uint32_t s, uint32_t m, const eil_options* opts, eil_report** out);

/* ---- experiments -------------------------------------------------------- */

EIL_API eil_status eil_montecarlo(uint32_t q, uint32_t t, uint64_t seed, uint32_t trials, const eil_options* opts,
                                  eil_report** out);

EIL_API eil_status eil_sweep(const uint32_t* qs, size_t q_count, uint32_t t, uint64_t seed, uint32_t trials,
                             const eil_options* opts, eil_report** out);

/* Exact finite-q targets: out[0] = q^-(t+1), out[1] = (1-1/q) C(q,t) q^-t, out[2] = C(q,t) q^-t. */
EIL_API eil_status eil_exact_probabilities(uint32_t q, uint32_t t, double out[3]);

/* ---- reports ------------------------------------------------------------ */

EIL_API eil_status eil_report_render(const eil_report* r, eil_format format, char** out);
EIL_API eil_status eil_report_save(const eil_report* r, eil_format format, const char* path);
/* 1 if every check passed, 0 otherwise. */
EIL_API int eil_report_passed(const eil_report* r);
EIL_API void eil_report_free(eil_report* r);

#ifdef __cplusplus
}
#endif

#endif /* EIL_EIL_H */
