#ifndef HDEPTH_H
#define HDEPTH_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HdModuleKind {
  /*
   R/I
   */
  HD_MODULE_KIND_QUOTIENT = 0,
  /*
   I
   */
  HD_MODULE_KIND_IDEAL = 1,
} HdModuleKind;

/*
 Status codes returned by every fallible entry point.
 */
typedef enum HdStatus {
  HD_STATUS_OK = 0,
  HD_STATUS_NULL_POINTER = 1,
  HD_STATUS_INVALID_UTF8 = 2,
  HD_STATUS_PARSE_ERROR = 3,
  HD_STATUS_INVALID_INPUT = 4,
  HD_STATUS_NOT_REDUCED = 5,
  HD_STATUS_NEGATIVE_MULTIPLICITY = 6,
  HD_STATUS_NOT_POSITIVE = 7,
  HD_STATUS_PANIC = 8,
} HdStatus;

/*
 Opaque result handle: depth value plus trace.
 */
typedef struct HdResult HdResult;

/*
 Opaque Hilbert series handle.
 */
typedef struct HdSeries HdSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread, or NULL if none.
 The pointer stays valid until the next failing call on the same thread.
 */
const char *hd_last_error(void);

/*
 Series `t^offset * (c_0 + c_1 t + ... ) / (1-t)^denom_exp`, stored as given.

 # Safety
 `coeffs` must point to `len` readable values (it may be NULL when `len`
 is 0) and `out` must be a valid pointer.
 */
enum HdStatus hd_series_from_coeffs(const int64_t *coeffs,
                                    size_t len,
                                    uint32_t denom_exp,
                                    int64_t offset,
                                    struct HdSeries **out);

/*
 Series with a numerator given as text, e.g. `"2-3*t-2*t^2+2*t^3+4*t^4"`.

 # Safety
 `numerator` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HdStatus hd_series_from_text(const char *numerator, uint32_t denom_exp, struct HdSeries **out);

/*
 Series of `R^free_rank ⊕ m` in `n_vars` variables, reduced.

 # Safety
 `out` must be a valid pointer.
 */
enum HdStatus hd_series_free_plus_maximal(uint32_t n_vars,
                                          uint64_t free_rank,
                                          struct HdSeries **out);

/*
 Reduced series of `R/I` or `I` (plus `R^free_rank` when nonzero), where
 `I` is generated by `n_gens` monomials whose exponent vectors are stored
 row by row in `exponents` (`n_gens * n_vars` values).

 # Safety
 `exponents` must point to `n_gens * n_vars` readable values (or be NULL
 when `n_gens` is 0) and `out` must be a valid pointer.
 */
enum HdStatus hd_series_monomial_module(uint32_t n_vars,
                                        const uint32_t *exponents,
                                        size_t n_gens,
                                        enum HdModuleKind kind,
                                        uint64_t free_rank,
                                        struct HdSeries **out);

/*
 Cancels common `(1-t)` factors in place.

 # Safety
 `series` must be a live handle or NULL.
 */
enum HdStatus hd_series_reduce(struct HdSeries *series);

/*
 Exponent of `(1-t)` in the denominator; the dimension once reduced.

 # Safety
 `series` must be a live handle or NULL (which yields 0).
 */
uint32_t hd_series_denom_exp(const struct HdSeries *series);

/*
 Numerator as text. Free with [`hd_string_free`]. NULL on a NULL handle.

 # Safety
 `series` must be a live handle or NULL.
 */
char *hd_series_numerator_text(const struct HdSeries *series);

/*
 # Safety
 `series` must come from this library and not be used afterwards.
 */
void hd_series_free(struct HdSeries *series);

/*
 Hilbert depth of a reduced series.

 # Safety
 `series` must be a live handle and `out` a valid pointer.
 */
enum HdStatus hd_hdepth(const struct HdSeries *series, struct HdResult **out);

/*
 True for the zero module.

 # Safety
 `result` must be a live handle or NULL.
 */
bool hd_result_is_infinite(const struct HdResult *result);

/*
 The depth, or `UINT32_MAX` when infinite or for a NULL handle.

 # Safety
 `result` must be a live handle or NULL.
 */
uint32_t hd_result_value(const struct HdResult *result);

/*
 Number of trace steps.

 # Safety
 `result` must be a live handle or NULL.
 */
size_t hd_result_trace_len(const struct HdResult *result);

/*
 JSON report, the same document `hdepth num --json` prints.
 Free with [`hd_string_free`].

 # Safety
 `result` must be a live handle or NULL.
 */
char *hd_result_to_json(const struct HdResult *result);

/*
 Verbose text report (`G(t)= ...`, one line per step, `hdepth= ...`).
 Free with [`hd_string_free`].

 # Safety
 `result` must be a live handle or NULL.
 */
char *hd_result_to_text(const struct HdResult *result);

/*
 # Safety
 `result` must come from this library and not be used afterwards.
 */
void hd_result_free(struct HdResult *result);

/*
 # Safety
 `s` must be a string returned by this library, not yet freed.
 */
void hd_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HDEPTH_H */
