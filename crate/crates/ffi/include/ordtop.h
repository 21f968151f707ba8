#ifndef ORDTOP_H
#define ORDTOP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OrdtopStatus {
  ORDTOP_STATUS_OK = 0,
  ORDTOP_STATUS_NULL_ARGUMENT = 1,
  ORDTOP_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON or predicate expression.
   */
  ORDTOP_STATUS_PARSE = 3,
  /**
   * Well-formed input that violates an axiom.
   */
  ORDTOP_STATUS_INVALID_STRUCTURE = 4,
  ORDTOP_STATUS_UNKNOWN_PREDICATE = 5,
  ORDTOP_STATUS_NOT_APPLICABLE = 6,
  ORDTOP_STATUS_CAPACITY_EXCEEDED = 7,
  ORDTOP_STATUS_PANIC = 8,
} OrdtopStatus;

typedef enum OrdtopTruth {
  ORDTOP_TRUTH_FALSE = 0,
  ORDTOP_TRUTH_TRUE = 1,
  ORDTOP_TRUTH_UNEVALUATED = 2,
} OrdtopTruth;

/**
 * Opaque handle to a validated structure.
 */
typedef struct OrdtopStructure OrdtopStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses and validates a structure file.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a writable pointer.
 */
enum OrdtopStatus ordtop_structure_from_json(const char *json, struct OrdtopStructure **out);

/**
 * # Safety
 * `s` must be null or a handle from [`ordtop_structure_from_json`] that
 * has not been freed.
 */
void ordtop_structure_free(struct OrdtopStructure *s);

/**
 * Number of points, or 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t ordtop_structure_size(const struct OrdtopStructure *s);

/**
 * True if the file had no `opens` and the discrete topology was used.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
bool ordtop_structure_discrete_default(const struct OrdtopStructure *s);

/**
 * Evaluates a predicate expression.
 *
 * # Safety
 * `s` must be a live handle, `expr` a nul-terminated string and `out` a
 * writable pointer.
 */
enum OrdtopStatus ordtop_evaluate(const struct OrdtopStructure *s,
                                  const char *expr,
                                  enum OrdtopTruth *out);

/**
 * Canonical structure-file JSON.
 *
 * # Safety
 * `s` must be a live handle and `out` a writable pointer.
 */
enum OrdtopStatus ordtop_structure_to_json(const struct OrdtopStructure *s, char **out);

/**
 * Isomorphism-invariant form as lowercase hex.
 *
 * # Safety
 * `s` must be a live handle and `out` a writable pointer.
 */
enum OrdtopStatus ordtop_canonical_form(const struct OrdtopStructure *s, char **out);

/**
 * DOT digraph of the order, or of the specialization preorder.
 *
 * # Safety
 * `s` must be a live handle and `out` a writable pointer.
 */
enum OrdtopStatus ordtop_structure_to_dot(const struct OrdtopStructure *s,
                                          bool specialization,
                                          char **out);

/**
 * Counts structures of a kind (`topology`, `poset`, `semilattice`,
 * `topo_poset`, `topo_semilattice`, `hom_pair`, `multimorphism_pair`) on
 * `n` points; pairs use `n` for both carriers.
 *
 * # Safety
 * `kind` must be a nul-terminated string and `out` a writable pointer.
 */
enum OrdtopStatus ordtop_enumerate_count(const char *kind,
                                         size_t n,
                                         bool modulo_iso,
                                         uint64_t *out);

/**
 * # Safety
 * `p` must be null or a string returned by this library, not yet freed.
 */
void ordtop_string_free(char *p);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *ordtop_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORDTOP_H */
