#ifndef IMPSEP_H
#define IMPSEP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum ImpsepStatus {
  IMPSEP_STATUS_OK = 0,
  /**
   * A decision query answered no.
   */
  IMPSEP_STATUS_NO = 1,
  IMPSEP_STATUS_NULL_POINTER = 2,
  IMPSEP_STATUS_INVALID_VERTEX = 3,
  IMPSEP_STATUS_INVALID_ARGUMENT = 4,
  IMPSEP_STATUS_NOT_A_SEPARATOR = 5,
  IMPSEP_STATUS_NO_SEPARATOR_EXISTS = 6,
  IMPSEP_STATUS_NON_MINIMAL_SEPARATOR = 7,
  IMPSEP_STATUS_NOT_NORMALIZED = 8,
  IMPSEP_STATUS_NOT_IN_NEIGHBORHOOD = 9,
  IMPSEP_STATUS_ADJACENT_TERMINALS = 10,
  IMPSEP_STATUS_PARSE = 11,
  IMPSEP_STATUS_MISSING_SETS = 12,
  IMPSEP_STATUS_INDEX_OUT_OF_RANGE = 13,
  IMPSEP_STATUS_PANIC = 14,
} ImpsepStatus;

/**
 * A graph with optional source, target and terminal sets.
 */
typedef struct ImpsepInstance ImpsepInstance;

/**
 * An ordered list of vertex sets, each sorted ascending.
 */
typedef struct ImpsepSets ImpsepSets;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an instance file held in the nul-terminated string `text`.
 *
 * # Safety
 * `text` must be a valid C string and `out` a writable pointer.
 */
enum ImpsepStatus impsep_instance_parse(const char *text, struct ImpsepInstance **out);

/**
 * Builds an instance on vertices `1..=n`; `edges` holds `2 * edge_count`
 * ids, one pair per edge.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable ids and `out` must be writable.
 */
enum ImpsepStatus impsep_instance_from_edges(uint32_t n,
                                             const uint32_t *edges,
                                             size_t edge_count,
                                             struct ImpsepInstance **out);

/**
 * # Safety
 * `inst` must come from this library and not be used afterwards; null is ignored.
 */
void impsep_instance_free(struct ImpsepInstance *inst);

/**
 * Sets the source set X.
 *
 * # Safety
 * `inst` must be a live instance and `ids` must point to `len` readable ids.
 */
enum ImpsepStatus impsep_instance_set_x(struct ImpsepInstance *inst,
                                        const uint32_t *ids,
                                        size_t len);

/**
 * Sets the target set Y.
 *
 * # Safety
 * `inst` must be a live instance and `ids` must point to `len` readable ids.
 */
enum ImpsepStatus impsep_instance_set_y(struct ImpsepInstance *inst,
                                        const uint32_t *ids,
                                        size_t len);

/**
 * Sets the terminal set.
 *
 * # Safety
 * `inst` must be a live instance and `ids` must point to `len` readable ids.
 */
enum ImpsepStatus impsep_instance_set_terminals(struct ImpsepInstance *inst,
                                                const uint32_t *ids,
                                                size_t len);

/**
 * Number of vertices, 0 for a null instance.
 *
 * # Safety
 * `inst` must be null or a live instance.
 */
size_t impsep_instance_vertex_count(const struct ImpsepInstance *inst);

/**
 * A minimum X-Y separator, as a list holding one set.
 *
 * # Safety
 * `inst` must be a live instance and `out` writable.
 */
enum ImpsepStatus impsep_min_separator(const struct ImpsepInstance *inst, struct ImpsepSets **out);

/**
 * The smallest important X-Y separator, as a list holding one set.
 *
 * # Safety
 * `inst` must be a live instance and `out` writable.
 */
enum ImpsepStatus impsep_smallest_important(const struct ImpsepInstance *inst,
                                            struct ImpsepSets **out);

/**
 * All important X-Y separators of excess at most `k`, ordered by size and
 * then lexicographically.
 *
 * # Safety
 * `inst` must be a live instance and `out` writable.
 */
enum ImpsepStatus impsep_enumerate_important(const struct ImpsepInstance *inst,
                                             size_t k,
                                             struct ImpsepSets **out);

/**
 * Decides whether a multiway cut of size at most `m + k` exists. Returns
 * `Ok` with the cut in `out` (a list holding one set), or `No` leaving
 * `out` null. `m` and the terminal attaining it are written when the
 * pointers are non-null.
 *
 * # Safety
 * `inst` must be a live instance, `out` writable, `m` and `terminal` null or writable.
 */
enum ImpsepStatus impsep_mwc_solve(const struct ImpsepInstance *inst,
                                   size_t k,
                                   struct ImpsepSets **out,
                                   size_t *m,
                                   uint32_t *terminal);

/**
 * Number of sets in the list, 0 for null.
 *
 * # Safety
 * `sets` must be null or a live list.
 */
size_t impsep_sets_count(const struct ImpsepSets *sets);

/**
 * Borrows set `index`: writes its ids pointer and length. The pointer stays
 * valid until the list is freed.
 *
 * # Safety
 * `sets` must be a live list; `ids` and `len` must be writable.
 */
enum ImpsepStatus impsep_sets_get(const struct ImpsepSets *sets,
                                  size_t index,
                                  const uint32_t **ids,
                                  size_t *len);

/**
 * # Safety
 * `sets` must come from this library and not be used afterwards; null is ignored.
 */
void impsep_sets_free(struct ImpsepSets *sets);

/**
 * Description of the last failure on this thread, or null. Valid until the
 * next library call on the same thread.
 */
const char *impsep_last_error(void);

/**
 * Static name of a status code; unknown codes get a generic name.
 */
const char *impsep_status_name(int32_t status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IMPSEP_H */
