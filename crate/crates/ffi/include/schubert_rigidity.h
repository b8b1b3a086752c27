#ifndef SCHUBERT_RIGIDITY_H
#define SCHUBERT_RIGIDITY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SrStatus {
  SR_OK = 0,
  SR_SYNTAX = 1,
  SR_INVALID = 2,
  SR_UNSUPPORTED = 3,
  SR_NOT_ESSENTIAL = 4,
  SR_NULL_ARGUMENT = 5,
  SR_BAD_UTF8 = 6,
  SR_INTERNAL = 7,
} SrStatus;

/**
 * A parsed and validated Schubert index.
 */
typedef struct SrIndex SrIndex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *sr_last_error(void);

/**
 * Parses and validates an index literal such as `2^1,4^2 @ F(1,2;4)`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SrStatus sr_index_parse(const char *text, struct SrIndex **out);

/**
 * Releases a handle from [`sr_index_parse`]. NULL is ignored.
 *
 * # Safety
 * `index` must come from [`sr_index_parse`] and not be used afterwards.
 */
void sr_index_free(struct SrIndex *index);

/**
 * Dimension of a type A Schubert variety.
 *
 * # Safety
 * `index` must be a live handle and `out` a writable pointer.
 */
enum SrStatus sr_index_dimension(const struct SrIndex *index, uint64_t *out);

/**
 * Class verdict: 1 rigid, 0 not rigid, -1 undecided.
 *
 * # Safety
 * `index` must be a live handle and `out` a writable pointer.
 */
enum SrStatus sr_class_rigid(const struct SrIndex *index, bool paper_literal, int32_t *out);

/**
 * Full rigidity report as a JSON string; free it with [`sr_string_free`].
 *
 * # Safety
 * `index` must be a live handle and `out` a writable pointer.
 */
enum SrStatus sr_rigid_json(const struct SrIndex *index, bool paper_literal, char **out);

/**
 * Expands a restriction sequence literal such as `F:2 | Q:6^0 @ OG(2,7)`
 * and returns the class as text; free it with [`sr_string_free`].
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SrStatus sr_expand(const char *text, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sr_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBERT_RIGIDITY_H */
