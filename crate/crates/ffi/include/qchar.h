#ifndef QCHAR_H
#define QCHAR_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible entry point.
typedef enum QcStatus {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_UTF8 = 2,
  QC_STATUS_PARSE = 3,
  QC_STATUS_INVALID_ARGUMENT = 4,
  QC_STATUS_OVERFLOW = 5,
  QC_STATUS_CAP_EXCEEDED = 6,
  QC_STATUS_NOT_SPARSE = 7,
  QC_STATUS_CONSISTENCY = 8,
  QC_STATUS_PANIC = 9,
} QcStatus;

// Outcome of comparing the closed formula with the elimination oracle.
typedef enum QcVerdict {
  QC_VERDICT_AGREE = 0,
  QC_VERDICT_DISAGREE = 1,
  QC_VERDICT_NOT_APPLICABLE = 2,
} QcVerdict;

// Opaque multiset of spectral exponents.
typedef struct QcDrinfeld QcDrinfeld;

// Opaque Laurent polynomial in the `Y_k`.
typedef struct QcPoly QcPoly;

// Opaque polynomial in `t`.
typedef struct QcTPoly QcTPoly;

typedef struct QcMultiplicity {
  // Whether `closed` holds a value (sparse or zero-multiplicity data).
  bool closed_applicable;
  uint64_t closed;
  uint64_t oracle;
  enum QcVerdict verdict;
} QcMultiplicity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. Valid until the
// next call into the library from the same thread.
const char *qc_last_error_message(void);

// # Safety
// `s` must come from this library and not have been freed.
void qc_string_free(char *s);

// Parses `k:m,k:m,...` (a bare `k` means multiplicity one).
//
// # Safety
// `input` must be a NUL-terminated string; `out` must be writable.
enum QcStatus qc_drinfeld_parse(const char *input, struct QcDrinfeld **out);

// # Safety
// `d` must come from [`qc_drinfeld_parse`] and not have been freed.
void qc_drinfeld_free(struct QcDrinfeld *d);

// Total multiplicity; 0 for a null handle.
//
// # Safety
// `d` must be a live handle or null.
uint64_t qc_drinfeld_total(const struct QcDrinfeld *d);

// # Safety
// `d` must be a live handle; `out` must be writable.
enum QcStatus qc_drinfeld_to_string(const struct QcDrinfeld *d, char **out);

// q-character of the KR module on the string `k, ..., k + n - 1`.
//
// # Safety
// `out` must be writable.
enum QcStatus qc_kr_character(uint32_t n, int64_t k, struct QcPoly **out);

// # Safety
// `d` must be a live handle; `out` must be writable.
enum QcStatus qc_standard_character(const struct QcDrinfeld *d,
                                    bool geometric,
                                    struct QcPoly **out);

// # Safety
// `d` must be a live handle; `out` must be writable.
enum QcStatus qc_simple_character(const struct QcDrinfeld *d, struct QcPoly **out);

// # Safety
// `p` must come from this library and not have been freed.
void qc_poly_free(struct QcPoly *p);

// Number of nonzero terms; 0 for a null handle.
//
// # Safety
// `p` must be a live handle or null.
size_t qc_poly_num_terms(const struct QcPoly *p);

// Sum of coefficients, i.e. the dimension of the module.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum QcStatus qc_poly_dimension(const struct QcPoly *p, int64_t *out);

// Text form such as `Y[0]*Y[1] + 1`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum QcStatus qc_poly_to_string(const struct QcPoly *p, char **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum QcStatus qc_poly_to_json(const struct QcPoly *p, char **out);

// `[M(pi) : V(pitilde)]` by the closed formula and by elimination.
//
// # Safety
// `pi` and `pitilde` must be live handles; `out` must be writable.
enum QcStatus qc_multiplicity(const struct QcDrinfeld *pi,
                              const struct QcDrinfeld *pitilde,
                              struct QcMultiplicity *out);

// Decomposition row of `M(pi)` as JSON: `[{"simple": ..., "mult": m}, ...]`.
//
// # Safety
// `pi` must be a live handle; `out` must be writable.
enum QcStatus qc_decomposition_row_json(const struct QcDrinfeld *pi, char **out);

// IC stalk polynomial for dimension vector `w` (length `n`), rank tuple
// `r` and point `k` (both of length `n - 1`).
//
// # Safety
// `w` must hold `n` values, `r` and `k` must hold `n - 1` values each (they
// may be null when `n <= 1`); `out` must be writable.
enum QcStatus qc_ic_stalk(const uint64_t *w,
                          size_t n,
                          const uint64_t *r,
                          const uint64_t *k,
                          struct QcTPoly **out);

// Gaussian binomial `(a choose n)_t`.
//
// # Safety
// `out` must be writable.
enum QcStatus qc_gauss_binom(uint32_t a, uint32_t n, struct QcTPoly **out);

// # Safety
// `p` must come from this library and not have been freed.
void qc_tpoly_free(struct QcTPoly *p);

// Number of stored coefficients (degree + 1; 0 for the zero polynomial).
//
// # Safety
// `p` must be a live handle or null.
size_t qc_tpoly_len(const struct QcTPoly *p);

// Coefficient of `t^i`; 0 past the end or for a null handle.
//
// # Safety
// `p` must be a live handle or null.
int64_t qc_tpoly_coeff(const struct QcTPoly *p, size_t i);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCHAR_H */
