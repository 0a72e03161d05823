#ifndef HOPF_H
#define HOPF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HopfStatus {
  HOPF_STATUS_OK = 0,
  HOPF_STATUS_NULL_POINTER = 1,
  HOPF_STATUS_INVALID_ARGUMENT = 2,
  HOPF_STATUS_NOT_UNIMODULAR = 3,
  HOPF_STATUS_NOT_PRIMITIVE = 4,
  HOPF_STATUS_NOT_HOMOLOGY_HOPF = 5,
  HOPF_STATUS_ORIENTATION_REVERSING = 6,
  HOPF_STATUS_OVERFLOW = 7,
  HOPF_STATUS_PARSE_ERROR = 8,
  HOPF_STATUS_INVALID_CERTIFICATE = 9,
  HOPF_STATUS_INTERNAL = 10,
} HopfStatus;

/**
 * A reduction certificate: `output = L₀ L₁ … · input · R₀ R₁ …`.
 */
typedef struct HopfCertificate HopfCertificate;

/**
 * A 3x3 integer gluing matrix with determinant ±1.
 */
typedef struct HopfMatrix HopfMatrix;

/**
 * Invariants of a single gluing.
 */
typedef struct HopfClassification {
  /**
   * +1 or -1.
   */
  int32_t det;
  /**
   * gcd(g, h) of the third column's first two entries.
   */
  int64_t meridian_gcd;
  /**
   * Free rank of the fundamental group.
   */
  uint32_t rank;
  /**
   * Order of the torsion subgroup, 1 when torsion-free.
   */
  int64_t torsion_order;
  bool homology_hopf;
} HopfClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Human-readable name of a status code. The string is static.
 */
const char *hopf_status_message(enum HopfStatus status);

/**
 * Builds a gluing matrix from nine row-major entries.
 *
 * # Safety
 * `entries` must point to nine readable `int64_t`; `out` must be writable.
 */
enum HopfStatus hopf_matrix_new(const int64_t *entries, struct HopfMatrix **out);

/**
 * The Hopf gluing `[[1,0,1],[0,1,0],[0,0,-1]]`.
 *
 * # Safety
 * `out` must be writable.
 */
enum HopfStatus hopf_matrix_zeta(struct HopfMatrix **out);

/**
 * Releases a matrix. Null is ignored.
 *
 * # Safety
 * `m` must come from this library and not be used afterwards.
 */
void hopf_matrix_free(struct HopfMatrix *m);

/**
 * Reads entry `(row, col)`, both zero-based.
 *
 * # Safety
 * `m` must be a live matrix; `out` must be writable.
 */
enum HopfStatus hopf_matrix_get(const struct HopfMatrix *m, size_t row, size_t col, int64_t *out);

/**
 * Copies the matrix with its meridian flipped when the determinant is -1.
 *
 * # Safety
 * `m` must be a live matrix; `out` must be writable.
 */
enum HopfStatus hopf_matrix_normalize(const struct HopfMatrix *m, struct HopfMatrix **out);

/**
 * Determinant, gcd(g, h), fundamental group and homology-Hopf flag.
 *
 * # Safety
 * `m` must be a live matrix; `out` must be writable.
 */
enum HopfStatus hopf_matrix_classify(const struct HopfMatrix *m, struct HopfClassification *out);

/**
 * Composes `φ₊⁻¹ ζ φ₋` from the canonical completions of two primitive
 * triples `(a, b, p)` and `(c, d, q)`.
 *
 * # Safety
 * `plus` and `minus` must point to three `int64_t` each; `out` must be writable.
 */
enum HopfStatus hopf_compose(const int64_t *plus, const int64_t *minus, struct HopfMatrix **out);

/**
 * Rank and torsion order `mu` of the fundamental group after two
 * logarithmic transformations, read directly from the presentation.
 * `mu` is 0 when the group is `Z²`.
 *
 * # Safety
 * `plus` and `minus` must point to three `int64_t` each; `rank` and `mu`
 * must be writable.
 */
enum HopfStatus hopf_pi1_two_log_transforms(const int64_t *plus,
                                            const int64_t *minus,
                                            uint32_t *rank,
                                            int64_t *mu);

/**
 * Reduces a determinant-one homology-Hopf gluing to normal form, or to
 * `[[1,0,1],[0,1,0],[0,0,1]]` when `standard` is set.
 *
 * # Safety
 * `m` must be a live matrix; `out` must be writable.
 */
enum HopfStatus hopf_reduce(const struct HopfMatrix *m,
                            bool standard,
                            struct HopfCertificate **out);

/**
 * Writes `true` when every factor is extendable and the product identity holds.
 *
 * # Safety
 * `c` must be a live certificate; `out` must be writable.
 */
enum HopfStatus hopf_certificate_verify(const struct HopfCertificate *c, bool *out);

/**
 * Number of left and right factors.
 *
 * # Safety
 * `c` must be a live certificate; `left` and `right` must be writable.
 */
enum HopfStatus hopf_certificate_factor_counts(const struct HopfCertificate *c,
                                               size_t *left,
                                               size_t *right);

/**
 * Serializes a certificate as a JSON document. Free the string with
 * [`hopf_string_free`].
 *
 * # Safety
 * `c` must be a live certificate; `out` must be writable.
 */
enum HopfStatus hopf_certificate_to_json(const struct HopfCertificate *c, char **out);

/**
 * Parses a certificate document. The certificate is not verified.
 *
 * # Safety
 * `json` must be a NUL-terminated UTF-8 string; `out` must be writable.
 */
enum HopfStatus hopf_certificate_from_json(const char *json, struct HopfCertificate **out);

/**
 * Parses and verifies a certificate document in one call.
 * Returns `HOPF_STATUS_INVALID_CERTIFICATE` when it parses but does not verify.
 *
 * # Safety
 * `json` must be a NUL-terminated UTF-8 string.
 */
enum HopfStatus hopf_verify_json(const char *json);

/**
 * Releases a certificate. Null is ignored.
 *
 * # Safety
 * `c` must come from this library and not be used afterwards.
 */
void hopf_certificate_free(struct HopfCertificate *c);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hopf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPF_H */
