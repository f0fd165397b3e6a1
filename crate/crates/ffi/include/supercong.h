#ifndef SUPERCONG_H
#define SUPERCONG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum ScStatus {
  ScStatus_Ok = 0,
  ScStatus_NullPointer = 1,
  ScStatus_InvalidUtf8 = 2,
  ScStatus_InvalidArgument = 3,
  ScStatus_UnknownId = 4,
  ScStatus_NotOddPrime = 5,
  /**
   * Any other engine error; see [`sc_last_error`].
   */
  ScStatus_EvaluationFailed = 6,
  ScStatus_SlowConvergence = 7,
  ScStatus_BufferTooSmall = 8,
  ScStatus_Panic = 9,
} ScStatus;

/**
 * Verdict of a single check.
 */
typedef enum ScVerdict {
  ScVerdict_Pass = 0,
  ScVerdict_Fail = 1,
  ScVerdict_Skipped = 2,
} ScVerdict;

/**
 * Output format for [`sc_report_render`].
 */
typedef enum ScFormat {
  ScFormat_Json = 0,
  ScFormat_Csv = 1,
  ScFormat_Text = 2,
} ScFormat;

/**
 * Results of a catalog sweep.
 */
typedef struct ScReport ScReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last error on this thread; empty if none. Valid until the
 * next failing call on the same thread.
 */
const char *sc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sc_version(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sc_string_free(char *s);

/**
 * Check catalog entry `id` at the prime `p` and exponent `a`.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `out` must be writable.
 */
enum ScStatus sc_check(const char *id, uint64_t p, uint32_t a, uint32_t guard, enum ScVerdict *out);

/**
 * Sweep the entries matching `patterns` (comma-separated, trailing `*` for a
 * prefix) over primes in `[lo, hi]` and `a = 1..=a_max`.
 *
 * # Safety
 * `patterns` must be a NUL-terminated string; `out` must be writable.
 */
enum ScStatus sc_run_range(const char *patterns,
                           uint64_t lo,
                           uint64_t hi,
                           uint32_t a_max,
                           uint32_t guard,
                           struct ScReport **out);

/**
 * Row and failure counts of a report.
 *
 * # Safety
 * `report` must be a live handle; the out pointers must be writable or null.
 */
enum ScStatus sc_report_counts(const struct ScReport *report, uintptr_t *rows, uintptr_t *fails);

/**
 * Verdict of row `i`.
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum ScStatus sc_report_verdict(const struct ScReport *report, uintptr_t i, enum ScVerdict *out);

/**
 * Render a report; free the string with [`sc_string_free`].
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum ScStatus sc_report_render(const struct ScReport *report, enum ScFormat format, char **out);

/**
 * Release a report. Null is ignored.
 *
 * # Safety
 * `report` must come from [`sc_run_range`] and not have been freed.
 */
void sc_report_free(struct ScReport *report);

/**
 * Primes `5 <= p <= bound` dividing `E_{p-3}`, written to `buf`. `len`
 * receives the count even when `cap` is too small.
 *
 * # Safety
 * `buf` must hold `cap` values (or be null with `cap == 0`); `len` writable.
 */
enum ScStatus sc_search_exceptional(uint64_t bound, uint64_t *buf, uintptr_t cap, uintptr_t *len);

/**
 * A reference constant (`pi`, `zeta3`, `zeta4`, `K`, `sqrt2`, `sqrt3`) to
 * `digits` decimal places.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum ScStatus sc_reference_constant(const char *name, uint32_t digits, char **out);

/**
 * Evaluate series `id` with `terms` terms at `digits` places; `out` gets the
 * verdict and `json` (if non-null) the full result.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `out` writable; `json` writable or null.
 */
enum ScStatus sc_eval_series(const char *id,
                             uint32_t digits,
                             uint64_t terms,
                             enum ScVerdict *out,
                             char **json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERCONG_H */
