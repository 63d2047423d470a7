#ifndef HLVERTEX_H
#define HLVERTEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HlvDirection {
  HLV_DIRECTION_LEFT_TO_RIGHT = 0,
  HLV_DIRECTION_RIGHT_TO_LEFT = 1,
} HlvDirection;

/**
 * Engine selector for [`hlv_kostka`].
 */
typedef enum HlvMethod {
  HLV_METHOD_KOSTANT = 0,
  HLV_METHOD_VERTEX = 1,
  /**
   * Runs both engines and fails with `HLV_STATUS_DISAGREEMENT` if they differ.
   */
  HLV_METHOD_BOTH = 2,
} HlvMethod;

/**
 * Outcome of a call.
 */
typedef enum HlvStatus {
  HLV_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  HLV_STATUS_NULL = 1,
  /**
   * An input string was not valid UTF-8.
   */
  HLV_STATUS_UTF8 = 2,
  HLV_STATUS_PARSE = 3,
  /**
   * Well-formed input that the operation does not accept.
   */
  HLV_STATUS_INVALID = 4,
  /**
   * The two Kostka engines returned different values.
   */
  HLV_STATUS_DISAGREEMENT = 5,
  HLV_STATUS_NON_INTEGRAL = 6,
  HLV_STATUS_TERMINATION = 7,
  /**
   * Division by zero, a pole, or a result that does not fit the output type.
   */
  HLV_STATUS_ARITHMETIC = 8,
  /**
   * An internal panic was caught at the boundary.
   */
  HLV_STATUS_PANIC = 9,
} HlvStatus;

/**
 * A linear combination of operator words.
 */
typedef struct HlvOpSum HlvOpSum;

/**
 * A polynomial in `q` with integer coefficients.
 */
typedef struct HlvPoly HlvPoly;

/**
 * A symmetric function with coefficients in `Q(q)`.
 */
typedef struct HlvSymFunc HlvSymFunc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or null.
 *
 * The pointer stays valid until the next call into this library on the same
 * thread. Do not free it.
 */
const char *hlv_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or came from this library and has not been freed.
 */
void hlv_string_free(char *s);

/**
 * Computes one generalized Kostka polynomial.
 *
 * `lambda` is a dominant weight such as `"2,1,1"`, `eta` a block shape such as
 * `"2,2"`. `gamma` is either flat (`"1,1,0,2"`, cut by `eta`) or given by
 * blocks separated by `;`.
 *
 * # Safety
 * String arguments are NUL-terminated; `out` is writable.
 */
enum HlvStatus hlv_kostka(const char *lambda,
                          const char *gamma,
                          const char *eta,
                          enum HlvMethod method,
                          struct HlvPoly **out);

/**
 * # Safety
 * `p` is null or an unfreed handle from this library.
 */
void hlv_poly_free(struct HlvPoly *p);

/**
 * Text form, e.g. `"q^2 + q"`.
 *
 * # Safety
 * `p` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_poly_to_string(const struct HlvPoly *p, char **out);

/**
 * JSON object mapping exponents to coefficients.
 *
 * # Safety
 * `p` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_poly_to_json(const struct HlvPoly *p, char **out);

/**
 * Degree of the polynomial, or -1 for zero.
 *
 * # Safety
 * `p` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_poly_degree(const struct HlvPoly *p, int64_t *out);

/**
 * Coefficient of `q^exponent`. Fails with `HLV_STATUS_ARITHMETIC` if it does
 * not fit in 64 bits.
 *
 * # Safety
 * `p` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_poly_coeff(const struct HlvPoly *p, int64_t exponent, int64_t *out);

/**
 * Straightens `H_v`. Writes the sign (-1, 0 or 1) and, when the sign is
 * nonzero, the dominant weight as text.
 *
 * On a zero result `*weight_out` is set to null.
 *
 * # Safety
 * `weight` is NUL-terminated; both outputs are writable.
 */
enum HlvStatus hlv_straighten(const char *weight, int32_t *sign_out, char **weight_out);

/**
 * Rewrites a two-factor word such as `"H[2,2]H[4,1]"` into dominant words.
 *
 * # Safety
 * `word` is NUL-terminated; `out` is writable.
 */
enum HlvStatus hlv_rewrite(const char *word, struct HlvOpSum **out);

/**
 * Exchanges the block lengths of a two-factor word.
 *
 * # Safety
 * `word` is NUL-terminated; `out` is writable.
 */
enum HlvStatus hlv_swap(const char *word, struct HlvOpSum **out);

/**
 * Moves one entry between the factors of a two-factor word.
 *
 * # Safety
 * `word` is NUL-terminated; `out` is writable.
 */
enum HlvStatus hlv_shift(const char *word, enum HlvDirection direction, struct HlvOpSum **out);

/**
 * # Safety
 * `s` is null or an unfreed handle from this library.
 */
void hlv_opsum_free(struct HlvOpSum *s);

/**
 * Number of terms.
 *
 * # Safety
 * `s` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_opsum_len(const struct HlvOpSum *s, size_t *out);

/**
 * # Safety
 * `s` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_opsum_to_string(const struct HlvOpSum *s, char **out);

/**
 * # Safety
 * `s` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_opsum_to_json(const struct HlvOpSum *s, char **out);

/**
 * Applies an operator word to the Schur function of `partition`
 * (empty string for 1).
 *
 * # Safety
 * Strings are NUL-terminated; `out` is writable.
 */
enum HlvStatus hlv_eval(const char *word, const char *partition, struct HlvSymFunc **out);

/**
 * # Safety
 * `f` is null or an unfreed handle from this library.
 */
void hlv_symfunc_free(struct HlvSymFunc *f);

/**
 * # Safety
 * `f` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_symfunc_to_string(const struct HlvSymFunc *f, char **out);

/**
 * # Safety
 * `f` is a live handle; `out` is writable.
 */
enum HlvStatus hlv_symfunc_to_json(const struct HlvSymFunc *f, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HLVERTEX_H */
