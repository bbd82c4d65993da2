/* Exercises the public C interface only. */
#include <stdio.h>
#include <string.h>

#include "eil/eil.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

static void test_errors(void) {
    eil_construction* c = NULL;
    EXPECT(eil_construct_incidence(4, 3, 1, NULL, NULL, &c) == EIL_ERR_PARAMETER);
    EXPECT(c == NULL);
    EXPECT(strstr(eil_last_error(), "q must be prime") != NULL);
    EXPECT(eil_construct_furedi(7, 4, NULL, &c) == EIL_ERR_PARAMETER);
    EXPECT(strcmp(eil_status_name(EIL_ERR_PARSE), "parse error") == 0);

    eil_report* r = NULL;
    EXPECT(eil_montecarlo(7, 3, 1, 10, NULL, &r) == EIL_ERR_PARAMETER);
    uint32_t one_q[] = {7};
    EXPECT(eil_sweep(one_q, 1, 3, 1, 5, NULL, &r) == EIL_ERR_PARAMETER);

    eil_graph* g = NULL;
    const char truncated[] = "general 3\n0 1\n1";
    EXPECT(eil_graph_parse(truncated, sizeof truncated - 1, &g) == EIL_ERR_PARSE);
    EXPECT(strstr(eil_last_error(), "line 3") != NULL);
    EXPECT(eil_graph_load("/nonexistent/graph.txt", &g) == EIL_ERR_IO);

    double p[3];
    EXPECT(eil_exact_probabilities(3, 4, p) == EIL_ERR_PARAMETER);
    EXPECT(eil_construct_incidence(7, 3, 1, NULL, NULL, NULL) == EIL_ERR_PARAMETER);
}

static void test_graph_roundtrip(void) {
    const char text[] = "bipartite 2 3\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";
    eil_graph* g = NULL;
    EXPECT(eil_graph_parse(text, strlen(text), &g) == EIL_OK);
    EXPECT(eil_graph_vertex_count(g) == 5);
    EXPECT(eil_graph_edge_count(g) == 6);
    EXPECT(eil_graph_is_bipartite(g) == 1);

    uint64_t count = 0;
    EXPECT(eil_graph_count_biclique(g, 2, 3, &count) == EIL_OK && count == 1);

    char* out = NULL;
    EXPECT(eil_graph_serialize(g, &out) == EIL_OK);
    EXPECT(out != NULL && strcmp(out, text) == 0);
    eil_string_free(out);

    eil_report* r = NULL;
    EXPECT(eil_verify(g, 2, 3, NULL, &r) == EIL_OK);
    EXPECT(eil_report_passed(r) == 0);
    char* json = NULL;
    EXPECT(eil_report_render(r, EIL_FORMAT_JSON, &json) == EIL_OK);
    EXPECT(strstr(json, "\"ksm_free_witness\"") != NULL);
    EXPECT(strstr(json, "\"schema\": \"report-v1\"") != NULL);
    eil_string_free(json);
    eil_report_free(r);
    eil_graph_free(g);
}

static void test_constructions(void) {
    eil_options opts = {2, 0, 0};
    eil_construction* f = NULL;
    EXPECT(eil_construct_furedi(7, 3, &opts, &f) == EIL_OK);
    EXPECT(eil_graph_vertex_count(eil_construction_graph(f)) == 16);
    EXPECT(eil_report_passed(eil_construction_report(f)) == 1);
    EXPECT(eil_construction_sidecar_count(f) >= 1);
    const char* suffix = NULL;
    const char* content = NULL;
    EXPECT(eil_construction_sidecar(f, 0, &suffix, &content) == EIL_OK);
    EXPECT(suffix != NULL && content != NULL);
    EXPECT(eil_construction_sidecar(f, 99, &suffix, &content) == EIL_ERR_PARAMETER);
    eil_construction_free(f);

    uint64_t sy = 77;
    eil_construction* a = NULL;
    eil_construction* b = NULL;
    EXPECT(eil_construct_incidence(7, 3, 42, &sy, NULL, &a) == EIL_OK);
    EXPECT(eil_construct_incidence(7, 3, 42, &sy, &opts, &b) == EIL_OK);
    char* ga = NULL;
    char* gb = NULL;
    eil_graph_serialize(eil_construction_graph(a), &ga);
    eil_graph_serialize(eil_construction_graph(b), &gb);
    EXPECT(ga && gb && strcmp(ga, gb) == 0);
    eil_string_free(ga);
    eil_string_free(gb);
    char* ra = NULL;
    char* rb = NULL;
    eil_report_render(eil_construction_report(a), EIL_FORMAT_CSV, &ra);
    eil_report_render(eil_construction_report(b), EIL_FORMAT_CSV, &rb);
    EXPECT(ra && rb && strcmp(ra, rb) == 0);
    EXPECT(strncmp(ra, "scope,index,field,value\n", 24) == 0);
    eil_string_free(ra);
    eil_string_free(rb);
    eil_construction_free(a);
    eil_construction_free(b);

    double p[3];
    EXPECT(eil_exact_probabilities(7, 3, p) == EIL_OK);
    EXPECT(p[1] > 30.0 / 343 - 1e-12 && p[1] < 30.0 / 343 + 1e-12);
    EXPECT(p[2] > 35.0 / 343 - 1e-12 && p[2] < 35.0 / 343 + 1e-12);
}

int main(void) {
    EXPECT(eil_version() != NULL && strlen(eil_version()) > 0);
    test_errors();
    test_graph_roundtrip();
    test_constructions();
    eil_construction_free(NULL);
    eil_graph_free(NULL);
    eil_report_free(NULL);
    if (failures) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    puts("capi: all checks passed");
    return 0;
}
