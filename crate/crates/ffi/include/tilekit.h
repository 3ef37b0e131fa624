/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TILEKIT_H
#define TILEKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum TkStatus {
  TK_STATUS_OK = 0,
  TK_STATUS_NULL_POINTER = 1,
  TK_STATUS_INVALID_UTF8 = 2,
  TK_STATUS_PARSE_ERROR = 3,
  TK_STATUS_GEOMETRY_ERROR = 4,
  TK_STATUS_LATTICE_ERROR = 5,
  TK_STATUS_FAMILY_ERROR = 6,
  TK_STATUS_INVALID_ARGUMENT = 7,
  TK_STATUS_INTERNAL = 99,
} TkStatus;

typedef struct TkLattice TkLattice;

typedef struct TkPolygon TkPolygon;

typedef struct TkTranslateSet TkTranslateSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread. Valid until the next
 * call into this library from the same thread; never null.
 */
const char *tk_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or a string returned by this library and not yet freed.
 */
void tk_string_free(char *s);

/**
 * Parses `{"vertices": [["x","y"], ...]}`.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is valid for writes.
 */
enum TkStatus tk_polygon_from_json(const char *json, struct TkPolygon **out);

/**
 * # Safety
 * `p` is null or a handle from `tk_polygon_from_json` / `tk_generate`.
 */
void tk_polygon_free(struct TkPolygon *p);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `p` is null or a live polygon handle.
 */
size_t tk_polygon_vertex_count(const struct TkPolygon *p);

/**
 * Serializes the polygon to JSON.
 *
 * # Safety
 * `p` is a live polygon handle; `out` is valid for writes.
 */
enum TkStatus tk_polygon_to_json(const struct TkPolygon *p, char **out);

/**
 * Parses `{"basis": [[..],[..]]}` or an object with a `"lattice"` key.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is valid for writes.
 */
enum TkStatus tk_lattice_from_json(const char *json, struct TkLattice **out);

/**
 * # Safety
 * `l` is null or a handle from this library.
 */
void tk_lattice_free(struct TkLattice *l);

/**
 * Parses `{"lattice": ..., "offsets": [...]}` or a bare lattice.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is valid for writes.
 */
enum TkStatus tk_translates_from_json(const char *json, struct TkTranslateSet **out);

/**
 * Translate set consisting of the lattice itself.
 *
 * # Safety
 * `l` is a live lattice handle; `out` is valid for writes.
 */
enum TkStatus tk_translates_from_lattice(const struct TkLattice *l, struct TkTranslateSet **out);

/**
 * # Safety
 * `x` is null or a handle from this library.
 */
void tk_translates_free(struct TkTranslateSet *x);

/**
 * Runs the Bolle check. `*multiplicity` receives `k` on success and 0 when
 * the polygon is not a multiple lattice tile for this lattice.
 * `report_json` may be null; otherwise it receives the full report.
 *
 * # Safety
 * Handles are live; `multiplicity` is valid for writes; `report_json` is
 * null or valid for writes.
 */
enum TkStatus tk_check_bolle(const struct TkPolygon *p,
                             const struct TkLattice *l,
                             uint64_t *multiplicity,
                             char **report_json);

/**
 * Decides whether `P + X` is a `k`-fold tiling. `report_json` may be null.
 *
 * # Safety
 * Handles are live; `pass` is valid for writes; `report_json` is null or
 * valid for writes.
 */
enum TkStatus tk_verify_k_fold(const struct TkPolygon *p,
                               const struct TkTranslateSet *x,
                               uint64_t k,
                               bool *pass,
                               char **report_json);

/**
 * Classifies the polygon; writes the classification as JSON.
 *
 * # Safety
 * `p` is a live handle; `out` is valid for writes.
 */
enum TkStatus tk_classify(const struct TkPolygon *p, char **out);

/**
 * Builds a family member. `family` is one of `parallelogram`, `hexagon`,
 * `octagon1`, `octagon2`, `decagon`. `parameter` is `alpha` or `beta` as
 * `p/q` for the octagons and the first vertex `x,y` for the decagon; it is
 * ignored (and may be null) for the other families, which use their
 * default shapes.
 *
 * # Safety
 * Strings are NUL-terminated (`parameter` may be null); out-parameters are
 * valid for writes.
 */
enum TkStatus tk_generate(const char *family,
                          const char *parameter,
                          struct TkPolygon **polygon_out,
                          struct TkLattice **lattice_out,
                          uint64_t *expected_k);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TILEKIT_H */
