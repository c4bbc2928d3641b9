#ifndef QHL_H
#define QHL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum QhlStatus {
  QHL_STATUS_OK = 0,
  QHL_STATUS_NULL_POINTER = 1,
  QHL_STATUS_INVALID_UTF8 = 2,
  QHL_STATUS_INVALID_INPUT = 3,
  QHL_STATUS_OUT_OF_RANGE = 4,
  QHL_STATUS_UNSUPPORTED = 5,
  QHL_STATUS_SINGULAR_SYSTEM = 6,
  QHL_STATUS_CONSISTENCY = 7,
  QHL_STATUS_PANIC = 8,
} QhlStatus;

// Opaque transition matrix.
typedef struct QhlMatrix QhlMatrix;

// Opaque Laurent polynomial.
typedef struct QhlPoly QhlPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null.
// The pointer stays valid until the next call on the same thread.
const char *qhl_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void qhl_string_free(char *s);

// Parses a polynomial from its JSON form `{"minexp":..,"coeffs":[..]}`.
//
// # Safety
// `text` must be a valid C string and `out` writable.
enum QhlStatus qhl_poly_from_json(const char *text, struct QhlPoly **out);

// Human-readable form such as `1+2q+q^2`.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum QhlStatus qhl_poly_to_string(const struct QhlPoly *p, char **out);

// Canonical JSON form.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum QhlStatus qhl_poly_to_json(const struct QhlPoly *p, char **out);

// Value at q = 1 as a decimal string.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum QhlStatus qhl_poly_eval_at_one(const struct QhlPoly *p, char **out);

// Writes 1 to `out` when both polynomials are equal, else 0.
//
// # Safety
// Both handles must be live and `out` writable.
enum QhlStatus qhl_poly_equal(const struct QhlPoly *a, const struct QhlPoly *b, int32_t *out);

// # Safety
// `p` must come from this library and not be freed twice. Null is ignored.
void qhl_poly_free(struct QhlPoly *p);

// Builds the transition matrix from basis `from` to basis `to` in degree `n`.
// Basis names are `S`, `R`, `Psi` and `L`.
//
// # Safety
// Strings must be valid C strings and `out` writable.
enum QhlStatus qhl_matrix_new(size_t n, const char *from, const char *to, struct QhlMatrix **out);

// Number of rows, which equals the number of columns.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum QhlStatus qhl_matrix_size(const struct QhlMatrix *m, size_t *out);

// Dotted label of the composition at position `index` of the canonical order.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum QhlStatus qhl_matrix_label(const struct QhlMatrix *m, size_t index, char **out);

// Copies entry (`row`, `col`) into a new polynomial handle.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum QhlStatus qhl_matrix_entry(const struct QhlMatrix *m,
                                size_t row,
                                size_t col,
                                struct QhlPoly **out);

// Whole matrix as JSON.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum QhlStatus qhl_matrix_to_json(const struct QhlMatrix *m, char **out);

// # Safety
// `m` must come from this library and not be freed twice. Null is ignored.
void qhl_matrix_free(struct QhlMatrix *m);

// Closed-form tableau polynomial. `kind` is `'A'` (composition such as `3.4.1`)
// or `'B'` (weak composition such as `1.2.0`).
//
// # Safety
// `comp` must be a valid C string and `out` writable.
enum QhlStatus qhl_pt(char kind, const char *comp, struct QhlPoly **out);

// Stationary distribution report as JSON. `method` is `formula`, `exact` or
// `mc`; `state` may be null to report every state.
//
// # Safety
// Non-null strings must be valid C strings and `out` writable.
enum QhlStatus qhl_pasep_report(size_t n,
                                const char *q,
                                const char *method,
                                const char *state,
                                uint64_t seed,
                                uint64_t steps,
                                char **out);

// Conjecture check report as JSON. `which` is `E-words`, `E-perms` or `F`.
//
// # Safety
// `which` must be a valid C string and `out` writable.
enum QhlStatus qhl_conjecture_report(size_t n, const char *which, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QHL_H */
