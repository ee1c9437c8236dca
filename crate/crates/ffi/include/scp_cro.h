#ifndef SCP_CRO_H
#define SCP_CRO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ScpStatus {
  SCP_STATUS_OK = 0,
  SCP_STATUS_NULL_POINTER = 1,
  SCP_STATUS_INVALID_UTF8 = 2,
  SCP_STATUS_PARSE_ERROR = 3,
  SCP_STATUS_INVALID_INSTANCE = 4,
  SCP_STATUS_INVALID_PARAM = 5,
  SCP_STATUS_IO_ERROR = 6,
  SCP_STATUS_TOO_LARGE = 7,
  SCP_STATUS_BUFFER_TOO_SMALL = 8,
  SCP_STATUS_PANIC = 9,
} ScpStatus;

typedef enum ScpFormat {
  /**
   * Costs, then per row the covering columns.
   */
  SCP_FORMAT_ROW_MAJOR = 0,
  /**
   * Unit costs, per column the covered rows.
   */
  SCP_FORMAT_COLUMN_MAJOR = 1,
  SCP_FORMAT_NATIVE = 2,
} ScpFormat;

typedef enum ScpAlgorithm {
  SCP_ALGORITHM_HCRO = 0,
  SCP_ALGORITHM_HCRO_IR = 1,
  SCP_ALGORITHM_HCRO_NR = 2,
  SCP_ALGORITHM_HGA = 3,
  SCP_ALGORITHM_GREEDY = 4,
} ScpAlgorithm;

/**
 * A parsed instance.
 */
typedef struct ScpInstance ScpInstance;

/**
 * Outcome of a solve or oracle call.
 */
typedef struct ScpRunResult ScpRunResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses instance text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ScpStatus scp_instance_parse(const char *text,
                                  enum ScpFormat format,
                                  struct ScpInstance **out);

/**
 * Reads an instance file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ScpStatus scp_instance_load(const char *path, enum ScpFormat format, struct ScpInstance **out);

/**
 * Seeded random instance with the given density and cost range.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ScpStatus scp_instance_generate(size_t rows,
                                     size_t columns,
                                     double density,
                                     uint64_t cost_lo,
                                     uint64_t cost_hi,
                                     uint64_t seed,
                                     struct ScpInstance **out);

/**
 * # Safety
 * `instance` must come from this library and not be freed twice.
 */
void scp_instance_free(struct ScpInstance *instance);

/**
 * Row count, or 0 for a null handle.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
size_t scp_instance_rows(const struct ScpInstance *instance);

/**
 * Column count, or 0 for a null handle.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
size_t scp_instance_columns(const struct ScpInstance *instance);

/**
 * One run with the default parameters. `fe_limit` of 0 means `n * 1000`.
 *
 * # Safety
 * `instance` must be a live handle and `out` a valid pointer.
 */
enum ScpStatus scp_solve(const struct ScpInstance *instance,
                         enum ScpAlgorithm algorithm,
                         uint64_t seed,
                         uint64_t fe_limit,
                         struct ScpRunResult **out);

/**
 * Exact optimum; instances with more than 25 columns give
 * `SCP_STATUS_TOO_LARGE`.
 *
 * # Safety
 * `instance` must be a live handle and `out` a valid pointer.
 */
enum ScpStatus scp_oracle(const struct ScpInstance *instance, struct ScpRunResult **out);

/**
 * # Safety
 * `result` must be null or a live handle.
 */
uint64_t scp_result_cost(const struct ScpRunResult *result);

/**
 * # Safety
 * `result` must be null or a live handle.
 */
uint64_t scp_result_fe_used(const struct ScpRunResult *result);

/**
 * Number of columns in the cover.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
size_t scp_result_cover_len(const struct ScpRunResult *result);

/**
 * Copies the cover's one-based column numbers into `buf`. `written`
 * receives the cover length even when `capacity` is too small.
 *
 * # Safety
 * `buf` must hold `capacity` elements; `written` must be valid.
 */
enum ScpStatus scp_result_cover(const struct ScpRunResult *result,
                                size_t *buf,
                                size_t capacity,
                                size_t *written);

/**
 * # Safety
 * `result` must come from this library and not be freed twice.
 */
void scp_result_free(struct ScpRunResult *result);

/**
 * Message of the last failed call on this thread. Valid until the next
 * call into the library from the same thread.
 */
const char *scp_last_error_message(void);

const char *scp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCP_CRO_H */
