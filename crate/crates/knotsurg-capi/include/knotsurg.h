#ifndef KNOTSURG_H
#define KNOTSURG_H

/* Generated by cbindgen from knotsurg-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Everything except `Ok` leaves an explanation in
 * [`knotsurg_last_error`].
 */
typedef enum KnotsurgStatus {
  KNOTSURG_STATUS_OK = 0,
  KNOTSURG_STATUS_NULL_ARGUMENT,
  KNOTSURG_STATUS_INVALID_UTF8,
  KNOTSURG_STATUS_SYNTAX,
  KNOTSURG_STATUS_INDEX_OUT_OF_RANGE,
  KNOTSURG_STATUS_NOT_A_KNOT,
  KNOTSURG_STATUS_RANK_MISMATCH,
  KNOTSURG_STATUS_DOMAIN,
  KNOTSURG_STATUS_OVERFLOW,
  KNOTSURG_STATUS_INTERNAL,
} KnotsurgStatus;

/**
 * Which concordance of `K # -K` acts in
 * [`knotsurg_concordance_surgery`].
 */
typedef enum KnotsurgConcordance {
  KNOTSURG_CONCORDANCE_PRODUCT = 0,
  KNOTSURG_CONCORDANCE_SLICE_SUM,
} KnotsurgConcordance;

/**
 * Opaque braid handle.
 */
typedef struct KnotsurgBraid KnotsurgBraid;

/**
 * Opaque handle to a normalized Alexander polynomial.
 */
typedef struct KnotsurgDelta KnotsurgDelta;

/**
 * Opaque handle to a Seiberg-Witten invariant (a finitely supported
 * integer function on a rank-`b` lattice).
 */
typedef struct KnotsurgSw KnotsurgSw;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if no
 * call has failed yet. The pointer is valid until the next failing call
 * on the same thread; do not free it.
 */
const char *knotsurg_last_error(void);

/**
 * Frees a string returned through a `char **` out-pointer.
 */
void knotsurg_string_free(char *s);

/**
 * Parses braid text (`"B2: s1 s1 s1"`) into a new handle.
 */
enum KnotsurgStatus knotsurg_braid_parse(const char *text, struct KnotsurgBraid **out);

void knotsurg_braid_free(struct KnotsurgBraid *braid);

/**
 * Renders the braid back to its textual form. Free the result with
 * [`knotsurg_string_free`].
 */
enum KnotsurgStatus knotsurg_braid_format(const struct KnotsurgBraid *braid, char **out);

/**
 * Strand count, or 0 for a null handle.
 */
size_t knotsurg_braid_strands(const struct KnotsurgBraid *braid);

/**
 * Number of components of the braid closure, or 0 for a null handle.
 */
size_t knotsurg_braid_components(const struct KnotsurgBraid *braid);

/**
 * New braid with every crossing sign inverted; null on a null input.
 */
struct KnotsurgBraid *knotsurg_braid_mirror(const struct KnotsurgBraid *braid);

/**
 * New braid with the word reversed; null on a null input.
 */
struct KnotsurgBraid *knotsurg_braid_reverse(const struct KnotsurgBraid *braid);

/**
 * Connected sum of two knot closures.
 */
enum KnotsurgStatus knotsurg_braid_connected_sum(const struct KnotsurgBraid *a,
                                                 const struct KnotsurgBraid *b,
                                                 struct KnotsurgBraid **out);

/**
 * Alexander polynomial of the braid closure via the reduced Burau
 * pipeline.
 */
enum KnotsurgStatus knotsurg_alexander(const struct KnotsurgBraid *braid,
                                       struct KnotsurgDelta **out);

/**
 * Same invariant computed independently through Fox calculus; useful
 * for cross-checking a build.
 */
enum KnotsurgStatus knotsurg_alexander_oracle(const struct KnotsurgBraid *braid,
                                              struct KnotsurgDelta **out);

/**
 * Parses a rendered polynomial (`"t^1 - 1 + t^-1"`); it must already be
 * normalized (symmetric, value 1 at `t = 1`).
 */
enum KnotsurgStatus knotsurg_delta_parse(const char *text, struct KnotsurgDelta **out);

void knotsurg_delta_free(struct KnotsurgDelta *delta);

/**
 * Renders in decreasing exponent order, e.g. `t^1 - 1 + t^-1`. Free the
 * result with [`knotsurg_string_free`].
 */
enum KnotsurgStatus knotsurg_delta_render(const struct KnotsurgDelta *delta, char **out);

/**
 * Exact equality; false when either handle is null.
 */
bool knotsurg_delta_eq(const struct KnotsurgDelta *a, const struct KnotsurgDelta *b);

/**
 * Product of two polynomials (the polynomial of a connected sum); null
 * on null inputs.
 */
struct KnotsurgDelta *knotsurg_delta_mul(const struct KnotsurgDelta *a,
                                         const struct KnotsurgDelta *b);

/**
 * Bounded Fox-Milnor slice obstruction: true iff the polynomial factors
 * as `f(t) f(1/t)` for some integer `f` of degree at most
 * `degree_bound`. False when the handle is null.
 */
bool knotsurg_fox_milnor_check(const struct KnotsurgDelta *delta, uint32_t degree_bound);

/**
 * New zero invariant on a rank-`rank` lattice.
 */
struct KnotsurgSw *knotsurg_sw_new(size_t rank);

void knotsurg_sw_free(struct KnotsurgSw *sw);

/**
 * Adds `coeff` at `class` (an array of `class_len == rank` entries),
 * accumulating with any existing coefficient.
 */
enum KnotsurgStatus knotsurg_sw_add_term(struct KnotsurgSw *sw,
                                         const int64_t *class_,
                                         size_t class_len,
                                         int64_t coeff);

size_t knotsurg_sw_rank(const struct KnotsurgSw *sw);

/**
 * Size of the support (number of basic classes), or 0 for null.
 */
size_t knotsurg_sw_support_size(const struct KnotsurgSw *sw);

/**
 * Reads the term at `index` (lexicographic class order). `class_out`
 * must have room for `rank` entries. Fails with `Overflow` when the
 * coefficient does not fit in an `int64_t`.
 */
enum KnotsurgStatus knotsurg_sw_term(const struct KnotsurgSw *sw,
                                     size_t index,
                                     int64_t *class_out,
                                     int64_t *coeff_out);

/**
 * Exact equality of invariants; ranks must match.
 */
enum KnotsurgStatus knotsurg_sw_equal(const struct KnotsurgSw *a,
                                      const struct KnotsurgSw *b,
                                      bool *out);

/**
 * Knot surgery along the torus class `torus` (an array of
 * `torus_len == rank` entries): multiplies the invariant by `delta`
 * under `t = exp(2[T])`.
 */
enum KnotsurgStatus knotsurg_knot_surgery(const struct KnotsurgSw *sw,
                                          const int64_t *torus,
                                          size_t torus_len,
                                          const struct KnotsurgDelta *delta,
                                          struct KnotsurgSw **out);

/**
 * True iff surgery by `delta` moves the double cover's invariant,
 * certifying a changed smooth structure downstairs.
 */
enum KnotsurgStatus knotsurg_twisted_surgery_changes(const struct KnotsurgSw *sw_cover,
                                                     const int64_t *torus,
                                                     size_t torus_len,
                                                     const struct KnotsurgDelta *delta,
                                                     bool *out);

/**
 * Applies a concordance action of `K # -K` built from the knot `braid`.
 */
enum KnotsurgStatus knotsurg_concordance_surgery(const struct KnotsurgSw *sw,
                                                 const int64_t *torus,
                                                 size_t torus_len,
                                                 const struct KnotsurgBraid *braid,
                                                 enum KnotsurgConcordance concordance,
                                                 struct KnotsurgSw **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNOTSURG_H */
