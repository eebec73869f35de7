/* Copyright (c) 2026 the tsc-graphs authors
 * Licensed under the Apache License, Version 2.0.
 *
 * C interface to the colored-graph symmetry library.  All structured data
 * crosses the boundary as JSON strings; records match the library's native
 * serialization (field, graph, matrix, certificate, report).  Every function
 * returns TSC_OK or an error status; the message for the most recent failure
 * on the calling thread is available via tsc_last_error().  Strings returned
 * through char** out parameters are owned by the caller and must be released
 * with tsc_string_free().
 */

#ifndef TSC_TSC_C_H
#define TSC_TSC_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsc_status {
  TSC_OK = 0,
  TSC_E_NOT_PRIME,
  TSC_E_MODULUS_REDUCIBLE,
  TSC_E_NOT_PRIMITIVE,
  TSC_E_FIELD_TOO_LARGE,
  TSC_E_ZERO_HAS_NO_LOG,
  TSC_E_DIVISION_BY_ZERO,
  TSC_E_NOT_EDGE_WELL_DEFINED,
  TSC_E_BAD_PARTITION,
  TSC_E_SINGULAR_GENERATOR,
  TSC_E_BAD_RECOLORING,
  TSC_E_NOT_STANDARD_FORM,
  TSC_E_NOT_COLOR_PERMUTING,
  TSC_E_ENUMERATION_TOO_LARGE,
  TSC_E_IMPOSSIBLE_TARGET,
  TSC_E_NOT_BINARY_FIELD,
  TSC_E_PARSE_ERROR,
  TSC_E_UNKNOWN_CASE,
  TSC_E_INVALID_ARGUMENT,
  TSC_E_INTERNAL
} tsc_status;

/* Opaque handle to a translation-invariant edge-colored complete graph. */
typedef struct tsc_graph tsc_graph;

/* Library version string; static storage, do not free. */
const char* tsc_version(void);

/* Message for the most recent error on this thread; static storage valid
 * until the next failing call on the same thread.  Empty string if none. */
const char* tsc_last_error(void);

/* Releases a string returned through a char** out parameter. */
void tsc_string_free(char* s);

/* --- fields ------------------------------------------------------------- */

/* Builds GF(p^r) and returns its record {p, r, poly, omega}.
 * poly_json: JSON array of r+1 coefficients, or NULL for the canonical
 * modulus.  omega_json: JSON array of r coefficients, or NULL for the
 * canonical primitive root. */
tsc_status tsc_field_build(long p, int r, const char* poly_json,
                           const char* omega_json, char** out_json);

/* --- graphs ------------------------------------------------------------- */

/* Constructs a graph from a named family.
 * family: "gp" (params {"k": int}), "paley" (params {}), "peisert"
 * (params {}), "direction" (params {"d": int}), "partition"
 * (params {"d": int, "blocks": [[[c0..],..],..], "label"?: string}).
 * field_json: field record of the base field.
 * params_json: family parameters as above; NULL means {}. */
tsc_status tsc_graph_build(const char* family, const char* field_json,
                           const char* params_json, tsc_graph** out);

/* Parses a serialized graph record. */
tsc_status tsc_graph_from_json(const char* json, tsc_graph** out);

/* Serializes the graph record {label, p, r, k, colors, field}. */
tsc_status tsc_graph_to_json(const tsc_graph* g, char** out_json);

void tsc_graph_free(tsc_graph* g);

/* --- classification machinery ------------------------------------------ */

/* Standard-form zero-stabilizer candidates with exactly k equal orbits.
 * Output: {"candidates": [{d, e, s, order}, ...], "overgroups"?: [...]}
 * where overgroups (present iff with_overgroups) lists, per candidate, the
 * index-k overgroups permuting its orbits with the induced color-group
 * summary. */
tsc_status tsc_foulser_enumerate(long p, int r, int k, int with_overgroups,
                                 char** out_json);

/* Arc-transitivity plus color-symmetry verdict.
 * stabilizer_json: {"triple": {d, e, s}} or {"matrices": [matrix, ...]}.
 * witnesses_json: JSON array of matrix records (may be empty or NULL).
 * Output: {arc_transitive, stabilizer_orbits, color_group_order,
 * is_symmetric, verdict}. */
tsc_status tsc_verify(const tsc_graph* g, const char* stabilizer_json,
                      const char* witnesses_json, char** out_json);

/* Color-preserving isomorphism test.
 * Output: {"isomorphic": bool, "map"?: [image of each vertex code]}. */
tsc_status tsc_iso(const tsc_graph* a, const tsc_graph* b, int permute_colors,
                   char** out_json);

/* Exhaustive matrix search for a color permutation.
 * config_json: {"target": [...], "fix_first_column"?, "prune_pair_sums"?,
 * "thread_count"?, "count_all"?}.
 * kind: "transposition", "cyclic", or "gf2".
 * cache_dir: certificate cache directory, or NULL for no cache.
 * Output: search certificate json + {"kind", "cache_hit"}. */
tsc_status tsc_search(const tsc_graph* g, const char* config_json,
                      const char* kind, const char* cache_dir,
                      char** out_json);

/* Full classification pipeline.
 * cases_json: JSON array of {"p", "r", "k"}, or NULL for the default table
 * (include_long adds the hours-budget binary case).
 * Output: report with per-case records and a run manifest. */
tsc_status tsc_replay(const char* cases_json, int include_long, int threads,
                      const char* cache_dir, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TSC_TSC_C_H */
