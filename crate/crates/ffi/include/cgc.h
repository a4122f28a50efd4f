#ifndef CGC_H
#define CGC_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Values 0–3 match the `cgc` command-line exit codes.
 */
typedef enum CgcStatus {
  CGC_STATUS_OK = 0,
  CGC_STATUS_CHECK_FAILED = 1,
  CGC_STATUS_PARSE_ERROR = 2,
  CGC_STATUS_VALIDATION_ERROR = 3,
  CGC_STATUS_NULL_POINTER = 4,
  CGC_STATUS_INVALID_ARGUMENT = 5,
  CGC_STATUS_PANIC = 6,
} CgcStatus;

/**
 * Opaque handle to an analyzed code.
 */
typedef struct CgcCode CgcCode;

/**
 * Parameters of an analyzed code.
 */
typedef struct CgcParams {
  uint64_t n;
  uint64_t k;
  uint64_t delta;
  uint64_t d_free;
  uint64_t singleton_bound;
  bool is_mds;
  bool input_was_catastrophic;
} CgcParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a spec and runs the analysis. On success `*out` holds a new handle.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum CgcStatus cgc_code_from_json(const char *json, struct CgcCode **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `code` must come from [`cgc_code_from_json`] and not be used afterwards.
 */
void cgc_code_free(struct CgcCode *code);

/**
 * # Safety
 * `code` must be a live handle and `out` a valid pointer.
 */
enum CgcStatus cgc_code_params(const struct CgcCode *code, struct CgcParams *out);

/**
 * Writes the JSON report, as printed by `cgc report`, to `*out`.
 *
 * # Safety
 * `code` must be a live handle and `out` a valid pointer.
 */
enum CgcStatus cgc_code_report_json(const struct CgcCode *code, char **out);

/**
 * Runs the rank and duality checks; `*passed` is false if any required
 * check fails, in which case `CheckFailed` is returned.
 *
 * # Safety
 * `code` must be a live handle and `passed` a valid pointer.
 */
enum CgcStatus cgc_code_verify(const struct CgcCode *code, bool *passed);

/**
 * Brute-force free distance over inputs of degree at most `deg_bound`.
 *
 * # Safety
 * `code` must be a live handle and `out` a valid pointer.
 */
enum CgcStatus cgc_code_free_distance_oracle(const struct CgcCode *code,
                                             size_t deg_bound,
                                             uint64_t *out);

/**
 * Number of built-in examples.
 */
size_t cgc_fixture_count(void);

/**
 * Writes the name and spec JSON of built-in example `index`.
 * Either out-pointer may be null.
 *
 * # Safety
 * Non-null out-pointers must be valid.
 */
enum CgcStatus cgc_fixture(size_t index, char **name, char **json);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void cgc_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty if none. Valid
 * until the next failing call on the same thread.
 */
const char *cgc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CGC_H */
