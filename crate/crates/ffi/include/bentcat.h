#ifndef BENTCAT_H
#define BENTCAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of a fallible call.
 */
typedef enum {
  BC_STATUS_OK = 0,
  BC_STATUS_NULL_ARGUMENT = 1,
  BC_STATUS_INVALID_ARGUMENT = 2,
  BC_STATUS_PARSE_ERROR = 3,
  BC_STATUS_NOT_BENT = 4,
  BC_STATUS_ODD_VARIABLES = 5,
  BC_STATUS_NOT_PERMUTATION = 6,
  BC_STATUS_FIELD_ERROR = 7,
  BC_STATUS_HYPOTHESIS_FAILED = 8,
  BC_STATUS_IO_ERROR = 9,
  BC_STATUS_INTERNAL = 10,
} BcStatus;

/**
 * Completed-class membership verdict.
 */
typedef enum {
  BC_MM_VERDICT_INSIDE = 0,
  BC_MM_VERDICT_OUTSIDE = 1,
  BC_MM_VERDICT_INCONCLUSIVE = 2,
} BcMmVerdict;

/**
 * Verdict of the four-function sharing certificate.
 */
typedef enum {
  BC_SHARING_VERDICT_OUTSIDE_CERTIFIED = 0,
  BC_SHARING_VERDICT_INCONCLUSIVE = 1,
  BC_SHARING_VERDICT_HYPOTHESIS_FAILED = 2,
} BcSharingVerdict;

/**
 * Opaque field context handle.
 */
typedef struct BcFieldContext BcFieldContext;

/**
 * Opaque point map handle.
 */
typedef struct BcPointMap BcPointMap;

/**
 * Opaque truth table handle.
 */
typedef struct BcTruthTable BcTruthTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bc_last_error_message(void);

/**
 * Frees a string returned by this library.
 */
void bc_string_free(char *s);

/**
 * Parses truth-table text (`n=<k>` header plus a 0/1 row) or an ANF
 * expression like `x1*x2 + x3 + 1`.
 */
BcStatus bc_tt_parse(const char *text, BcTruthTable **out);

void bc_tt_free(BcTruthTable *t);

/**
 * Variable count, or 0 for a null handle.
 */
uint32_t bc_tt_variables(const BcTruthTable *t);

/**
 * Value at point x (0 or 1); -1 for a null handle or out-of-range x.
 */
int32_t bc_tt_value(const BcTruthTable *t, uint32_t x);

/**
 * Truth-table text form; free with `bc_string_free`.
 */
BcStatus bc_tt_format(const BcTruthTable *t, char **out);

/**
 * Canonical ANF text; free with `bc_string_free`.
 */
BcStatus bc_tt_anf(const BcTruthTable *t, char **out);

/**
 * Writes 1 into `out` iff the function is bent. Fails on odd variable
 * counts.
 */
BcStatus bc_tt_is_bent(const BcTruthTable *t, int32_t *out);

uint32_t bc_tt_degree(const BcTruthTable *t);

/**
 * 1 iff every ANF monomial has the same degree.
 */
int32_t bc_tt_is_homogeneous(const BcTruthTable *t);

/**
 * Dual of a bent function.
 */
BcStatus bc_tt_dual(const BcTruthTable *t, BcTruthTable **out);

/**
 * Pointwise sum of two functions with equal variable counts.
 */
BcStatus bc_tt_xor(const BcTruthTable *a, const BcTruthTable *b, BcTruthTable **out);

/**
 * Completed Maiorana-McFarland membership of a bent function.
 * `budget_seconds <= 0` means unbounded.
 */
BcStatus bc_tt_mm_sharp(const BcTruthTable *t, double budget_seconds, BcMmVerdict *out);

/**
 * Builds GF(2^m); `modulus = 0` selects the default primitive
 * polynomial for the degree.
 */
BcStatus bc_field_new(uint32_t m, uint32_t modulus, BcFieldContext **out);

void bc_field_free(BcFieldContext *ctx);

/**
 * Product of two elements; 0 for a null handle or out-of-range input.
 */
uint32_t bc_field_mul(const BcFieldContext *ctx, uint32_t x, uint32_t y);

BcStatus bc_field_inv(const BcFieldContext *ctx, uint32_t x, uint32_t *out);

/**
 * Absolute trace bit; -1 for a null handle or out-of-range input.
 */
int32_t bc_field_trace(const BcFieldContext *ctx, uint32_t x);

/**
 * a^e for the field generator a; e may be negative.
 */
uint32_t bc_field_generator_pow(const BcFieldContext *ctx, int64_t e);

/**
 * Parses permutation-file text (`m=<k>` header plus image indices).
 */
BcStatus bc_pointmap_parse(const char *text, BcPointMap **out);

/**
 * The monomial map y -> alpha y^d over the given field.
 */
BcStatus bc_pointmap_monomial(const BcFieldContext *ctx,
                              uint32_t alpha,
                              uint64_t d,
                              BcPointMap **out);

void bc_pointmap_free(BcPointMap *p);

int32_t bc_pointmap_is_permutation(const BcPointMap *p);

BcStatus bc_pointmap_inverse(const BcPointMap *p, BcPointMap **out);

/**
 * Writes 1 into `out` iff the triple's sum is a permutation whose
 * inverse equals the sum of the inverses.
 */
BcStatus bc_check_am(const BcPointMap *p1,
                     const BcPointMap *p2,
                     const BcPointMap *p3,
                     int32_t *out);

/**
 * 1 iff no second derivative of the map vanishes anywhere.
 */
int32_t bc_check_p1(const BcPointMap *p);

/**
 * 1 iff the map is almost perfect nonlinear.
 */
int32_t bc_is_apn(const BcPointMap *p);

/**
 * Maiorana-McFarland bent function x . pi(y) + h(y).
 */
BcStatus bc_mm_bent_dot(const BcPointMap *pi, const BcTruthTable *h, BcTruthTable **out);

/**
 * Trace-form Maiorana-McFarland bent function Tr(x pi(y)) + h(y).
 */
BcStatus bc_mm_bent_trace(const BcFieldContext *ctx,
                          const BcPointMap *pi,
                          const BcTruthTable *h,
                          BcTruthTable **out);

/**
 * Concatenation of four n-variable functions into n+2 variables.
 */
BcStatus bc_concat4(const BcTruthTable *f1,
                    const BcTruthTable *f2,
                    const BcTruthTable *f3,
                    const BcTruthTable *f4,
                    BcTruthTable **out);

/**
 * Writes 1 into `out` iff the duals of the four bent inputs sum to the
 * constant one.
 */
BcStatus bc_dual_bent_condition(const BcTruthTable *f1,
                                const BcTruthTable *f2,
                                const BcTruthTable *f3,
                                const BcTruthTable *f4,
                                int32_t *out);

/**
 * Runs the sharing certificate on four bent pieces.
 */
BcStatus bc_sharing_verdict(const BcTruthTable *f1,
                            const BcTruthTable *f2,
                            const BcTruthTable *f3,
                            const BcTruthTable *f4,
                            BcSharingVerdict *out);

/**
 * Bent concatenation of the monomial family alpha_i y^d with
 * h_i = Tr(beta_i y^k); `sigma` holds a permutation of 0..4.
 */
BcStatus bc_monomial_concat(const BcFieldContext *ctx,
                            uint64_t d,
                            uint64_t k,
                            const uint32_t *alphas,
                            const size_t *sigma,
                            BcTruthTable **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BENTCAT_H */
