#ifndef SCHURWEYL_H
#define SCHURWEYL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `SW_STATUS_OK` is zero; everything else is a failure.
 */
typedef enum SwStatus {
  SW_STATUS_OK = 0,
  SW_STATUS_NULL_POINTER = 1,
  SW_STATUS_INVALID_UTF8 = 2,
  SW_STATUS_PARSE = 3,
  SW_STATUS_ARGUMENT = 4,
  SW_STATUS_DIMENSION = 5,
  SW_STATUS_RESOURCE = 6,
  SW_STATUS_UNDECIDED = 7,
  SW_STATUS_ORACLE_MISMATCH = 8,
  SW_STATUS_PANIC = 9,
} SwStatus;

/**
 * An integer weight with finite support.
 */
typedef struct SwWeight SwWeight;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call into the library on the
 * same thread.
 */
const char *sw_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void sw_string_free(char *s);

/**
 * Parses `{"entries":{"3":-1}}` or the bare map `{"3":-1}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum SwStatus sw_weight_from_json(const char *json, struct SwWeight **out);

/**
 * Builds the weight `j -> values[j]`; zero values are skipped.
 *
 * # Safety
 * `values` must point to `len` readable integers (or be null with `len == 0`).
 */
enum SwStatus sw_weight_from_values(const int64_t *values, size_t len, struct SwWeight **out);

/**
 * Releases a weight. Null is ignored.
 *
 * # Safety
 * `w` must come from this library and not have been freed already.
 */
void sw_weight_free(struct SwWeight *w);

/**
 * Canonical JSON of a weight.
 *
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SwStatus sw_weight_to_json(const struct SwWeight *w, char **out);

/**
 * `sum |lambda_j|`.
 *
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SwStatus sw_weight_l1_norm(const struct SwWeight *w, uint64_t *out);

/**
 * Do `a` and `b` differ by a finite permutation of indices?
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SwStatus sw_orbit_equal(const struct SwWeight *a, const struct SwWeight *b, bool *out);

/**
 * Is `lambda = ±e_j`?
 *
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SwStatus sw_is_contractive(const struct SwWeight *w, bool *out);

/**
 * Membership of the rational point `mu_json` (`{"0":"1/2",..}`) in the
 * weak-* closed (`norm_closed == false`) or norm-closed hull of the orbit
 * of `lambda`.
 *
 * # Safety
 * `lambda` must be a live handle, `mu_json` NUL-terminated, `out` writable.
 */
enum SwStatus sw_hull_contains(const struct SwWeight *lambda,
                               const char *mu_json,
                               bool norm_closed,
                               bool *out);

/**
 * Extreme orbits of the hull, as a JSON list of value lists.
 *
 * # Safety
 * `lambda` must be a live handle and `out` writable.
 */
enum SwStatus sw_extreme_points(const struct SwWeight *lambda, bool norm_closed, char **out);

/**
 * `max_w <w lambda, x>` as a `"p/q"` JSON string.
 *
 * # Safety
 * `lambda` must be a live handle, `x_json` NUL-terminated, `out` writable.
 */
enum SwStatus sw_support_functional(const struct SwWeight *lambda, const char *x_json, char **out);

/**
 * A separating functional for two weights in different orbits:
 * `{"direction","witness","gap"}`.
 *
 * # Safety
 * `lambda`, `mu` must be live handles and `out` writable.
 */
enum SwStatus sw_separating_vector(const struct SwWeight *lambda,
                                   const struct SwWeight *mu,
                                   char **out);

/**
 * Isotypic decomposition of `(Q^n)^{⊗k}` as a JSON list of
 * `{"partition","dimS","dimM"}`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SwStatus sw_decompose(size_t n, size_t k, char **out);

/**
 * Weights with multiplicity of the Schur module of a partition given as
 * `[2,1]`: `{"partition","n","weights":[{"weight","multiplicity"}]}`.
 *
 * # Safety
 * `partition_json` must be NUL-terminated and `out` writable.
 */
enum SwStatus sw_weights_of(const char *partition_json, size_t n, char **out);

/**
 * Membership of a Hermitian matrix (`{"n","re","im"}`) in the weak-* or
 * norm-closed momentum set of `lambda`.
 *
 * # Safety
 * `lambda` must be a live handle, `matrix_json` NUL-terminated, `out` writable.
 */
enum SwStatus sw_momentum_contains(const struct SwWeight *lambda,
                                   const char *matrix_json,
                                   bool norm_closed,
                                   bool *out);

/**
 * Sum of the `k` largest eigenvalues of a Hermitian matrix:
 * `{"exact":"p/q"}` or an enclosing `{"lo","hi"}`.
 *
 * # Safety
 * `matrix_json` must be NUL-terminated and `out` writable.
 */
enum SwStatus sw_spectral_s_k(const char *matrix_json, size_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHURWEYL_H */
