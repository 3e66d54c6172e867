/* C interface of the reeb library.
 *
 * Objects are opaque handles released with their *_free function. Functions
 * return a reeb_status; on failure reeb_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). Strings
 * returned through char** out-parameters are heap allocated and must be
 * released with reeb_string_free(). Rational numbers cross the interface as
 * text: decimals ("1.25") or fractions ("7/3").
 */
#ifndef REEB_H
#define REEB_H

#include <stddef.h>
#include <stdint.h>

#if defined(REEB_BUILDING_LIBRARY)
#define REEB_API __attribute__((visibility("default")))
#else
#define REEB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct reeb_graph reeb_graph;
typedef struct reeb_diagram reeb_diagram;

typedef enum reeb_status {
  REEB_OK = 0,
  REEB_ERR_PARSE = 1,
  REEB_ERR_INVALID_GRAPH = 2,
  REEB_ERR_INVALID_ARGUMENT = 3,
  REEB_ERR_PRECONDITION = 4,
  REEB_ERR_IO = 5,
  REEB_ERR_INTERNAL = 6
} reeb_status;

typedef enum reeb_path_metric { REEB_METRIC_BOTTLENECK = 0, REEB_METRIC_FD = 1 } reeb_path_metric;

REEB_API const char* reeb_last_error(void);
REEB_API const char* reeb_status_name(reeb_status status);
REEB_API void reeb_string_free(char* s);

/* Graphs. Text format: "v <id> <value>" and "e <id> <id>" lines, '#' comments;
 * a JSON object is accepted as well. */
REEB_API reeb_status reeb_graph_parse(const char* text, reeb_graph** out);
REEB_API reeb_status reeb_graph_load(const char* path, reeb_graph** out);
/* "segment", "cycle", "Y", "figure1_left", "figure1_right", "figure5:<n>",
 * "random:<seed>:<critical>:<lo>:<hi>". */
REEB_API reeb_status reeb_graph_generate(const char* spec, reeb_graph** out);
REEB_API void reeb_graph_free(reeb_graph* g);
REEB_API size_t reeb_graph_vertex_count(const reeb_graph* g);
REEB_API size_t reeb_graph_edge_count(const reeb_graph* g);
/* as_json != 0 selects the JSON format. */
REEB_API reeb_status reeb_graph_print(const reeb_graph* g, int as_json, char** out);
/* *ok is set to 1 for a valid graph; *report lists one violation per line. */
REEB_API reeb_status reeb_graph_validate(const reeb_graph* g, int* ok, char** report);
REEB_API reeb_status reeb_graph_canonicalize(const reeb_graph* g, reeb_graph** out);
REEB_API reeb_status reeb_graph_component_count(const reeb_graph* g, size_t* out);
REEB_API reeb_status reeb_graph_component(const reeb_graph* g, size_t index, reeb_graph** out);
/* JSON object: vertices, edges, components, b1, critical_values, a_f. */
REEB_API reeb_status reeb_graph_stats(const reeb_graph* g, char** json);

/* Diagrams. Text format: "<kind> <birth> <death>" lines, kinds Ord0 Rel1 Ext0 Ext1. */
REEB_API reeb_status reeb_diagram_compute(const reeb_graph* g, reeb_diagram** out);
REEB_API reeb_status reeb_diagram_parse(const char* text, reeb_diagram** out);
/* Loads a diagram file, or a graph file whose diagram is then computed. */
REEB_API reeb_status reeb_diagram_load(const char* path, reeb_diagram** out);
REEB_API void reeb_diagram_free(reeb_diagram* d);
REEB_API size_t reeb_diagram_size(const reeb_diagram* d);
REEB_API int reeb_diagram_equal(const reeb_diagram* a, const reeb_diagram* b);
REEB_API reeb_status reeb_diagram_print(const reeb_diagram* d, char** out);
REEB_API reeb_status reeb_diagram_snap(const reeb_diagram* d, const char* a, const char* b, reeb_diagram** out);

/* Exact bottleneck distance. *witness (may be NULL) receives one line per
 * matched pair or unmatched point. */
REEB_API reeb_status reeb_bottleneck(const reeb_diagram* a, const reeb_diagram* b, char** value, char** witness);

/* Operators. */
REEB_API reeb_status reeb_merge(const reeb_graph* g, const char* a, const char* b, reeb_graph** out);
/* *certificate (may be NULL) receives an upper bound on d_FD(g, out). */
REEB_API reeb_status reeb_simplify(const reeb_graph* g, const char* alpha, reeb_graph** out, char** certificate);
/* Anchors are the critical values of `anchor_graph`. *report (may be NULL)
 * receives a JSON object with the certificates and warnings. */
REEB_API reeb_status reeb_transform(const reeb_graph* g, const reeb_graph* anchor_graph, const char* alpha,
                                    reeb_graph** out, char** report);

/* Level-preserving isomorphism; *witness (may be NULL) maps ids as "a -> b" lines. */
REEB_API reeb_status reeb_level_isomorphic(const reeb_graph* a, const reeb_graph* b, int* result, char** witness);

/* Functional distortion bounds as a JSON object. witness is "natural",
 * "collapse", "file" (witness_text then holds the witness file) or "auto". */
REEB_API reeb_status reeb_fd_bound(const reeb_graph* a, const reeb_graph* b, const char* witness,
                                   const char* witness_text, char** report);
/* Length of the path described by a manifest file as a JSON object. */
REEB_API reeb_status reeb_path_length(const char* manifest_path, reeb_path_metric metric, char** report);
/* Upper bound on the intrinsic distance as a JSON object. */
REEB_API reeb_status reeb_intrinsic_upper(const reeb_graph* a, const reeb_graph* b, char** report);

typedef struct reeb_experiment_config {
  uint64_t seed;
  unsigned trials;       /* 0: the experiment's default */
  const char* K;         /* NULL: 1/22 */
  const char* eps_frac;  /* NULL: 1/2 */
} reeb_experiment_config;

/* Comma separated experiment names. */
REEB_API const char* reeb_experiment_names(void);
/* records != 0 selects JSON-lines output. *passed is 1 iff every trial passed. */
REEB_API reeb_status reeb_experiment(const char* name, const reeb_experiment_config* config, int records, char** out,
                                     int* passed);

#ifdef __cplusplus
}
#endif

#endif
