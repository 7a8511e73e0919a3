#ifndef SYMPAIR_H
#define SYMPAIR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SYMPAIR_SCHEME_CANTOR 0

#define SYMPAIR_SCHEME_F 1

#define SYMPAIR_SCHEME_G 2

/**
 * Result code of every fallible call.
 */
typedef enum SympairStatus {
  SYMPAIR_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  SYMPAIR_STATUS_NULL_POINTER = 1,
  /**
   * The scheme constant is not one of `SYMPAIR_SCHEME_*`.
   */
  SYMPAIR_STATUS_INVALID_SCHEME = 2,
  /**
   * An argument lies outside the scheme's domain, e.g. 0 for scheme F.
   */
  SYMPAIR_STATUS_DOMAIN = 3,
  /**
   * A string was not a plain decimal natural or not valid UTF-8.
   */
  SYMPAIR_STATUS_PARSE = 4,
  /**
   * A result does not fit in 64 bits.
   */
  SYMPAIR_STATUS_OVERFLOW = 5,
  /**
   * Internal failure; indicates a bug in the library.
   */
  SYMPAIR_STATUS_INTERNAL = 6,
} SympairStatus;

/**
 * Opaque arbitrary-precision natural number.
 */
typedef struct SympairNatural SympairNatural;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Allocates a handle holding `value`. Never returns NULL.
 */
struct SympairNatural *sympair_natural_from_u64(uint64_t value);

/**
 * Parses a NUL-terminated decimal string (ASCII digits only).
 *
 * # Safety
 * `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or
 * writable.
 */
enum SympairStatus sympair_natural_from_decimal(const char *text, struct SympairNatural **out);

/**
 * Renders a handle as a decimal string, or NULL if `n` is NULL.
 * Release the result with `sympair_string_free`.
 *
 * # Safety
 * `n` must be NULL or a live handle.
 */
char *sympair_natural_to_decimal(const struct SympairNatural *n);

/**
 * # Safety
 * `n` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum SympairStatus sympair_natural_to_u64(const struct SympairNatural *n, uint64_t *out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `n` must be NULL or a handle from this library that has not been freed.
 */
void sympair_natural_free(struct SympairNatural *n);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library that has not been freed.
 */
void sympair_string_free(char *s);

/**
 * Pairs `m` and `n` under `scheme`, storing a new handle in `*out`.
 *
 * # Safety
 * `m`, `n` must be live handles; `out` must be writable.
 */
enum SympairStatus sympair_pair(uint32_t scheme,
                                const struct SympairNatural *m,
                                const struct SympairNatural *n,
                                struct SympairNatural **out);

/**
 * Inverts `code` under `scheme`. Symmetric schemes yield `m >= n`.
 *
 * # Safety
 * `code` must be a live handle; `out_m` and `out_n` must be writable.
 */
enum SympairStatus sympair_unpair(uint32_t scheme,
                                  const struct SympairNatural *code,
                                  struct SympairNatural **out_m,
                                  struct SympairNatural **out_n);

/**
 * Fixed-width variant of `sympair_pair`; fails with `Overflow` when the
 * code exceeds `UINT64_MAX`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SympairStatus sympair_pair_u64(uint32_t scheme, uint64_t m, uint64_t n, uint64_t *out);

/**
 * Fixed-width variant of `sympair_unpair`.
 *
 * # Safety
 * `out_m` and `out_n` must be writable.
 */
enum SympairStatus sympair_unpair_u64(uint32_t scheme,
                                      uint64_t code,
                                      uint64_t *out_m,
                                      uint64_t *out_n);

/**
 * Static description of a status code. Never NULL; do not free.
 */
const char *sympair_status_message(int32_t status);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SYMPAIR_H */
