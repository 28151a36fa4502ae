/* C interface to the gem library. All handles are opaque; strings returned
 * through char** out-parameters are allocated by the library and must be
 * released with gem_free_string. On failure a function returns a non-zero
 * status and gem_last_error() describes it (per thread). */
#ifndef GEM_GEM_H
#define GEM_GEM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GEM_API __declspec(dllexport)
#else
#define GEM_API __attribute__((visibility("default")))
#endif

typedef enum gem_status {
  GEM_OK = 0,
  GEM_ERR_INVALID_ARGUMENT = 1,
  GEM_ERR_PARSE = 2,
  GEM_ERR_IO = 3,
  GEM_ERR_CANCELLED = 4,
  GEM_ERR_INTERNAL = 5,
  GEM_ERR_NULL = 6
} gem_status;

typedef struct gem_graph gem_graph;
typedef struct gem_census gem_census;
typedef struct gem_cancel gem_cancel;

GEM_API const char* gem_last_error(void);
GEM_API const char* gem_status_name(gem_status status);
GEM_API void gem_free_string(char* s);

/* Graphs */
GEM_API gem_status gem_graph_from_code(const char* code, gem_graph** out);
GEM_API gem_status gem_graph_from_tri(const char* text, gem_graph** out);
GEM_API void gem_graph_free(gem_graph* g);
GEM_API int gem_graph_order(const gem_graph* g);
GEM_API gem_status gem_graph_code(const gem_graph* g, char** out);
GEM_API gem_status gem_graph_canonical_code(const gem_graph* g, char** out);
/* Multi-line human-readable report of every invariant and move. */
GEM_API gem_status gem_graph_analyze(const gem_graph* g, char** out);
/* The catalog line (one JSON object, no trailing newline). */
GEM_API gem_status gem_graph_record(const gem_graph* g, char** out);
GEM_API gem_status gem_graph_export_tri(const gem_graph* g, char** out);

/* Moves. Vertex and edge handles are 0-based vertex indices of g. */
GEM_API gem_status gem_graph_cancel_dipole(const gem_graph* g, int u, int v, gem_graph** out);
/* colors: bit mask over {0,1,2,3} with one to three bits set. */
GEM_API gem_status gem_graph_insert_dipole(const gem_graph* g, int at, unsigned colors, gem_graph** out);
/* Switches the rho-pair of color c whose edges have smaller endpoints e and f.
 * The resulting components (one or two) are stored in parts[0..*count-1];
 * parts must have room for two handles. */
GEM_API gem_status gem_graph_switch_pair(const gem_graph* g, int c, int e, int f, gem_graph** parts, size_t* count);
/* Classification of a good rho3-pair switch, e.g. "connected-fewer-boundary". */
GEM_API gem_status gem_graph_classify_rho3(const gem_graph* g, int c, int e, int f, char** out);

/* Cancellation token for long censuses; safe to raise from another thread. */
GEM_API gem_cancel* gem_cancel_new(void);
GEM_API void gem_cancel_request(gem_cancel* token);
GEM_API void gem_cancel_free(gem_cancel* token);

typedef enum gem_orientability { GEM_ANY = 0, GEM_BIPARTITE = 1, GEM_NON_BIPARTITE = 2 } gem_orientability;
typedef enum gem_boundary_class { GEM_BOUNDARY_ANY = 0, GEM_BOUNDARY_TORIC = 1, GEM_BOUNDARY_TORIC_CONNECTED = 2 } gem_boundary_class;

typedef struct gem_census_options {
  int order;
  gem_orientability orientability;
  int require_boundary;
  gem_boundary_class boundary_class;
  int rigid_only;
  int contracted_only;
  int no_2_dipoles;
  unsigned threads; /* 0: GEM_THREADS or hardware concurrency */
} gem_census_options;

GEM_API void gem_census_options_init(gem_census_options* options);
GEM_API gem_status gem_census_run(const gem_census_options* options, const gem_cancel* cancel, gem_census** out);
GEM_API void gem_census_free(gem_census* census);
GEM_API size_t gem_census_count(const gem_census* census);
/* Borrowed pointer, valid until gem_census_free. */
GEM_API const char* gem_census_code(const gem_census* census, size_t index);
GEM_API gem_status gem_census_record(const gem_census* census, size_t index, char** out);
GEM_API gem_status gem_census_write(const gem_census* census, const char* path);

/* Parses a catalog without recomputing anything. */
GEM_API gem_status gem_catalog_read(const char* path, size_t* records);

/* Reads a catalog, recomputing every record from its code. mismatches counts
 * records whose stored fields differ; report lists them. */
GEM_API gem_status gem_catalog_check(const char* path, size_t* records, size_t* mismatches, char** report);

/* Runs the table verification; failures receives the number of failed items. */
GEM_API gem_status gem_verify_tables(int extended, unsigned threads, int* failures, char** report);

#ifdef __cplusplus
}
#endif

#endif
