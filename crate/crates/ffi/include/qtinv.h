#ifndef QTINV_H
#define QTINV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum QtinvStatus {
  QTINV_STATUS_OK = 0,
  QTINV_STATUS_NULL_POINTER = 1,
  QTINV_STATUS_INVALID_UTF8 = 2,
  QTINV_STATUS_INVALID_ARGUMENT = 3,
  QTINV_STATUS_PROBLEM_TOO_LARGE = 4,
  QTINV_STATUS_ARITHMETIC = 5,
  QTINV_STATUS_OVERFLOW = 6,
  QTINV_STATUS_IO = 7,
  QTINV_STATUS_INTERNAL = 8,
  QTINV_STATUS_PANIC = 9,
} QtinvStatus;

// Elements are the integers `0..q`; `0` and `1` are the field's zero and one.
typedef enum QtinvFieldOp {
  QTINV_FIELD_OP_ADD = 0,
  QTINV_FIELD_OP_SUB = 1,
  QTINV_FIELD_OP_MUL = 2,
  QTINV_FIELD_OP_DIV = 3,
} QtinvFieldOp;

// Finite field `F_q`.
typedef struct QtinvField QtinvField;

// Polynomial in `t` with integer coefficients.
typedef struct QtinvSeries QtinvSeries;

// Counts from a grid run.
typedef struct QtinvRunSummary {
  uint64_t cells;
  uint64_t passed;
  uint64_t failed;
  uint64_t skipped;
  uint64_t cache_hits;
} QtinvRunSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *qtinv_version(void);

// Message for the last failure on this thread, or null. Valid until the next call on this thread.
const char *qtinv_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void qtinv_string_free(char *s);

// Builds `F_q` for a prime power `q`.
//
// # Safety
// `out` must be valid for writes.
enum QtinvStatus qtinv_field_new(uint64_t q, struct QtinvField **out);

// # Safety
// `f` must be null or a field from [`qtinv_field_new`], not yet freed.
void qtinv_field_free(struct QtinvField *f);

// Field order; 0 if `f` is null.
//
// # Safety
// `f` must be null or a live field handle.
uint32_t qtinv_field_order(const struct QtinvField *f);

// # Safety
// `f` must be a live field handle and `out` valid for writes.
enum QtinvStatus qtinv_field_op(const struct QtinvField *f,
                                enum QtinvFieldOp op,
                                uint32_t a,
                                uint32_t b,
                                uint32_t *out);

// Closed-form orbit polynomial `C_alpha(q, m; t)`.
//
// # Safety
// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
enum QtinvStatus qtinv_closed_form(uint64_t q,
                                   uint32_t m,
                                   const uint32_t *alpha,
                                   size_t alpha_len,
                                   struct QtinvSeries **out);

// Computes the Hilbert series of the invariants of `P_alpha` on `F_q[x]/(x_i^{q^m})`.
// A `basis_bound` of 0 selects the default.
//
// # Safety
// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
enum QtinvStatus qtinv_hilb_fixed(uint64_t q,
                                  uint32_t m,
                                  const uint32_t *alpha,
                                  size_t alpha_len,
                                  uint64_t basis_bound,
                                  struct QtinvSeries **out);

// Computes the cofixed Hilbert series of `P_alpha` on `F_q[x]` through degree `max_degree`.
// A `basis_bound` of 0 selects the default.
//
// # Safety
// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
enum QtinvStatus qtinv_hilb_cofixed(uint64_t q,
                                    const uint32_t *alpha,
                                    size_t alpha_len,
                                    uint32_t max_degree,
                                    uint64_t basis_bound,
                                    struct QtinvSeries **out);

// Counts `P_alpha`-orbits on `F_{q^m}^n` by enumeration. An `enum_bound` of 0 selects the default.
//
// # Safety
// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
enum QtinvStatus qtinv_orbit_count(uint64_t q,
                                   uint32_t m,
                                   const uint32_t *alpha,
                                   size_t alpha_len,
                                   uint64_t enum_bound,
                                   uint64_t *out);

// # Safety
// `s` must be null or a live series handle.
void qtinv_series_free(struct QtinvSeries *s);

// Degree of the series; -1 for the zero polynomial or a null handle.
//
// # Safety
// `s` must be null or a live series handle.
int64_t qtinv_series_degree(const struct QtinvSeries *s);

// Coefficient of `t^k`; [`QtinvStatus::Overflow`] if it does not fit in `i64`.
//
// # Safety
// `s` must be a live series handle and `out` valid for writes.
enum QtinvStatus qtinv_series_coeff(const struct QtinvSeries *s, uint64_t k, int64_t *out);

// Decimal text such as `1 + t^6 + t^8`; free with [`qtinv_string_free`].
//
// # Safety
// `s` must be a live series handle and `out` valid for writes.
enum QtinvStatus qtinv_series_to_string(const struct QtinvSeries *s, char **out);

// Same as the `show` subcommand: `object` names a closed form and `params`
// holds `key=value` strings.
//
// # Safety
// `object` must be a NUL-terminated string, `params` must point to
// `params_len` such strings, and `out` must be valid for writes.
enum QtinvStatus qtinv_show(const char *object,
                            const char *const *params,
                            size_t params_len,
                            char **out);

// Runs a JSON grid config and writes reports under `output_dir` (or the
// directory named in the config when null). Failing checks are counted in
// `summary`, not reported as an error status.
//
// # Safety
// `config_json` must be a NUL-terminated string, `output_dir` null or a
// NUL-terminated string, and `summary` valid for writes.
enum QtinvStatus qtinv_run_grid(const char *config_json,
                                const char *output_dir,
                                struct QtinvRunSummary *summary);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTINV_H */
