/* C interface for the coxlab exact reflection-group toolkit. */

#ifndef COXLAB_H
#define COXLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum CoxlabStatus {
  COXLAB_STATUS_OK = 0,
  COXLAB_STATUS_NULL_ARGUMENT = 1,
  COXLAB_STATUS_INVALID_UTF8 = 2,
  COXLAB_STATUS_BAD_TYPE = 3,
  COXLAB_STATUS_GROUP_TOO_LARGE = 4,
  COXLAB_STATUS_NO_MATRIX_MODEL = 5,
  COXLAB_STATUS_CHECK_FAILED = 6,
  COXLAB_STATUS_INTERNAL = 7,
} CoxlabStatus;

/**
 * Opaque handle over a fully built group context.
 */
typedef struct CoxlabCtx CoxlabCtx;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build a context for a Coxeter type string like "A3", "B4", "I2(7)" or
 * "A2xB3". On success the handle must be released with coxlab_ctx_free.
 *
 * # Safety
 * `type_name` must be a valid NUL-terminated string and `out` a valid
 * pointer.
 */
enum CoxlabStatus coxlab_ctx_new(const char *type_name, struct CoxlabCtx **out);

/**
 * Release a context handle. A null pointer is a no-op.
 *
 * # Safety
 * `ctx` must have come from coxlab_ctx_new and not be freed twice.
 */
void coxlab_ctx_free(struct CoxlabCtx *ctx);

/**
 * Release a string returned by any coxlab function.
 *
 * # Safety
 * `s` must have come from a coxlab function and not be freed twice.
 */
void coxlab_string_free(char *s);

/**
 * Group order.
 *
 * # Safety
 * `ctx` and `out` must be valid pointers.
 */
enum CoxlabStatus coxlab_ctx_order(const struct CoxlabCtx *ctx, uint64_t *out);

/**
 * Rank of the reflection representation.
 *
 * # Safety
 * `ctx` and `out` must be valid pointers.
 */
enum CoxlabStatus coxlab_ctx_rank(const struct CoxlabCtx *ctx, uint32_t *out);

/**
 * Number of reflections (= positive roots).
 *
 * # Safety
 * `ctx` and `out` must be valid pointers.
 */
enum CoxlabStatus coxlab_ctx_reflections(const struct CoxlabCtx *ctx, uint64_t *out);

/**
 * Number of maximal chains of NC(W), as a decimal string.
 *
 * # Safety
 * `ctx` and `out` must be valid pointers; free the string with
 * coxlab_string_free.
 */
enum CoxlabStatus coxlab_ctx_max_chains(const struct CoxlabCtx *ctx, char **out);

/**
 * Number of multichains w_1 <= ... <= w_k of NC(W), as a decimal string.
 *
 * # Safety
 * `ctx` and `out` must be valid pointers; free the string with
 * coxlab_string_free.
 */
enum CoxlabStatus coxlab_ctx_zeta(const struct CoxlabCtx *ctx, uint32_t k, char **out);

/**
 * det(tI + L_W) rendered like "t^3 + 12 t^2 + 48 t + 64".
 *
 * # Safety
 * `ctx` and `out` must be valid pointers; free the string with
 * coxlab_string_free.
 */
enum CoxlabStatus coxlab_ctx_laplacian_charpoly(const struct CoxlabCtx *ctx, char **out);

/**
 * Run one identity check by name (e.g. "chain-number"); writes the JSON
 * report and returns CheckFailed when the identity does not hold.
 *
 * # Safety
 * All pointers must be valid; free the report with coxlab_string_free.
 */
enum CoxlabStatus coxlab_ctx_verify(const struct CoxlabCtx *ctx,
                                    const char *identity,
                                    char **report_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COXLAB_H */
