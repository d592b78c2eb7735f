#ifndef QFC_H
#define QFC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QfcAnswer {
  QFC_ANSWER_YES = 0,
  QFC_ANSWER_NO = 1,
  QFC_ANSWER_UNKNOWN = 2,
} QfcAnswer;

typedef enum QfcProperty {
  QFC_PROPERTY_QFC = 0,
  QFC_PROPERTY_PFC = 1,
  QFC_PROPERTY_FC = 2,
  QFC_PROPERTY_RETRACT = 3,
  QFC_PROPERTY_NORMAL = 4,
} QfcProperty;

typedef enum QfcStatus {
  QFC_STATUS_OK = 0,
  QFC_STATUS_NULL_POINTER = 1,
  QFC_STATUS_INVALID_UTF8 = 2,
  QFC_STATUS_PARSE_ERROR = 3,
  QFC_STATUS_INVALID_INPUT = 4,
  QFC_STATUS_BUDGET_EXCEEDED = 5,
  QFC_STATUS_INTERNAL = 6,
} QfcStatus;

/**
 * A subalgebra of a Laurent polynomial ring over Q or F_p.
 */
typedef struct QfcAlgebra QfcAlgebra;

/**
 * A finitely generated submonoid of ℤⁿ.
 */
typedef struct QfcMonoid QfcMonoid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *qfc_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` is null or was returned through a `char **` out-parameter of this
 * library and not yet freed.
 */
void qfc_string_free(char *s);

/**
 * Parses monoid generators, `(a,b);(c,d)` or `3,5`.
 *
 * # Safety
 * `text` is a nul-terminated string; `out` is valid for writes.
 */
enum QfcStatus qfc_monoid_parse(const char *text, struct QfcMonoid **out);

/**
 * # Safety
 * `m` is null or a handle from [`qfc_monoid_parse`] not yet freed.
 */
void qfc_monoid_free(struct QfcMonoid *m);

/**
 * Ambient dimension, or 0 for a null handle.
 *
 * # Safety
 * `m` is null or a live handle.
 */
size_t qfc_monoid_dimension(const struct QfcMonoid *m);

/**
 * Decides `prop` for the monoid algebra R[M].
 *
 * # Safety
 * `m` is a live handle; `answer_out` is valid; `json_out` is null or valid.
 */
enum QfcStatus qfc_monoid_decide(const struct QfcMonoid *m,
                                 enum QfcProperty prop,
                                 enum QfcAnswer *answer_out,
                                 char **json_out);

/**
 * Membership test; `coefficients_out`, when non-null, receives a JSON array
 * of nonnegative generator coefficients for members.
 *
 * # Safety
 * `m` is a live handle; `point` holds `len` entries; `member_out` is valid;
 * `coefficients_out` is null or valid.
 */
enum QfcStatus qfc_monoid_contains(const struct QfcMonoid *m,
                                   const int64_t *point,
                                   size_t len,
                                   bool *member_out,
                                   char **coefficients_out);

/**
 * Parses `"f1; f2; ..."` over `field` (`Q`, `F2`, ...) in `nvars`
 * variables (0 infers the count).
 *
 * # Safety
 * `text` and `field` are nul-terminated strings; `out` is valid.
 */
enum QfcStatus qfc_algebra_parse(const char *text,
                                 const char *field,
                                 size_t nvars,
                                 struct QfcAlgebra **out);

/**
 * # Safety
 * `a` is null or a handle from [`qfc_algebra_parse`] not yet freed.
 */
void qfc_algebra_free(struct QfcAlgebra *a);

/**
 * Semi-decides qfc, pfc (one variable, or refutation through qfc) or fc.
 *
 * # Safety
 * `a` is a live handle; `answer_out` is valid; `json_out` is null or valid.
 */
enum QfcStatus qfc_algebra_decide(const struct QfcAlgebra *a,
                                  enum QfcProperty prop,
                                  enum QfcAnswer *answer_out,
                                  char **json_out);

/**
 * Re-checks a verdict document produced by this library or the `qfc` tool.
 *
 * # Safety
 * `json` is a nul-terminated string; `valid_out` is valid.
 */
enum QfcStatus qfc_verify_document(const char *json, bool *valid_out);

/**
 * Frobenius number of the numerical semigroup generated by `gens`
 * (−1 for ℕ).
 *
 * # Safety
 * `gens` holds `len` entries; `out` is valid.
 */
enum QfcStatus qfc_frobenius(const uint64_t *gens, size_t len, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QFC_H */
