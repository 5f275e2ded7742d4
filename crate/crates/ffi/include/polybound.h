#ifndef POLYBOUND_H
#define POLYBOUND_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum PbStatus {
  PB_STATUS_OK = 0,
  PB_STATUS_NULL_POINTER = 1,
  PB_STATUS_INVALID_INPUT = 2,
  PB_STATUS_PARSE = 3,
  PB_STATUS_RANGE = 4,
  PB_STATUS_NUMERICAL_FAILURE = 5,
  PB_STATUS_PANIC = 6,
} PbStatus;

// Opaque polynomial handle. Create with `pb_polynomial_parse` or
// `pb_polynomial_new`, release with `pb_polynomial_free`.
typedef struct PbPolynomial PbPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `"90,-101,18"`-style ascending coefficients (or a JSON array of
// `[re, im]` pairs) into a new handle.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be writable.
enum PbStatus pb_polynomial_parse(const char *text, struct PbPolynomial **out);

// Builds a polynomial from `len` ascending coefficients. `im` may be null
// for real coefficients.
//
// # Safety
// `re` (and `im` if non-null) must point to `len` readable doubles.
enum PbStatus pb_polynomial_new(const double *re,
                                const double *im,
                                size_t len,
                                struct PbPolynomial **out);

// Releases a handle; null is ignored.
//
// # Safety
// `poly` must come from this library and not be used afterwards.
void pb_polynomial_free(struct PbPolynomial *poly);

// Total degree, counting any `z^k` factor.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum PbStatus pb_polynomial_degree(const struct PbPolynomial *poly, size_t *out);

// `‖F‖_p` on the unit circle with default quadrature; `p` may be `INFINITY`.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum PbStatus pb_lp_norm(const struct PbPolynomial *poly, double p, double *out);

// # Safety
// `poly` must be a live handle; `out` must be writable.
enum PbStatus pb_sup_norm(const struct PbPolynomial *poly, double *out);

// Mahler measure from the roots.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum PbStatus pb_mahler_measure(const struct PbPolynomial *poly, double *out);

// # Safety
// `out` must be writable.
enum PbStatus pb_bp_constant(double p, double *out);

// `I_p(r)`.
//
// # Safety
// `out` must be writable.
enum PbStatus pb_ip_value(double p, double r, double *out);

// Symmetric root-product bound, `1 <= p <= 2`.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum PbStatus pb_thm1_sym(const struct PbPolynomial *poly, double p, double *out);

// Asymmetric Mahler-measure bound, `p >= 1`.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum PbStatus pb_thm1_asym(const struct PbPolynomial *poly, double p, double *out);

// The full bound report as JSON. Free the string with `pb_string_free`.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum PbStatus pb_bound_report_json(const struct PbPolynomial *poly, double p, char **out);

// Releases a string returned by this library; null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void pb_string_free(char *s);

// Message for the most recent failure on this thread, or null. Valid until
// the next failing call on the same thread.
const char *pb_last_error(void);

// Value of `M(F)² / |a_0 a_N|` above which the asymmetric bound wins at `p = 1`.
double pb_crossover_threshold(void);

// Positive root of `2c² = (1 + c²) log(1 + c²)`.
double pb_optimal_p_constant(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYBOUND_H */
