#ifndef MAGMA_H
#define MAGMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MagmaStatus {
  MAGMA_STATUS_OK = 0,
  MAGMA_STATUS_NULL_ARGUMENT = 1,
  MAGMA_STATUS_INVALID_UTF8 = 2,
  MAGMA_STATUS_UNKNOWN_DOMAIN = 3,
  MAGMA_STATUS_PARSE_ERROR = 4,
  MAGMA_STATUS_EVAL_ERROR = 5,
  MAGMA_STATUS_TYPE_ERROR = 6,
  MAGMA_STATUS_KIND_MISMATCH = 7,
  MAGMA_STATUS_DOMAIN_MISMATCH = 8,
  MAGMA_STATUS_SEEDS_UNAVAILABLE = 9,
  MAGMA_STATUS_NOT_A_PAIR = 10,
  MAGMA_STATUS_PANIC = 11,
} MagmaStatus;

/**
 * An immutable canonical magma.
 */
typedef struct MagmaMagma MagmaMagma;

/**
 * An evaluation session: a domain, its seed atoms and its bindings.
 */
typedef struct MagmaSession MagmaSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *magma_last_error(void);

/**
 * `domain` is `tag`, `plane` or `qdup`.
 *
 * # Safety
 * `domain` must be a nul-terminated string; `out` must be writable.
 */
enum MagmaStatus magma_session_new(const char *domain, struct MagmaSession **out);

/**
 * # Safety
 * `session` must come from [`magma_session_new`] and not be used afterwards.
 */
void magma_session_free(struct MagmaSession *session);

/**
 * Evaluates every expression in `source`; `(let ...)` bindings persist in
 * the session. The printed values, one per line, go to `out`; release it
 * with [`magma_string_free`].
 *
 * # Safety
 * `session` must be a live session handle, `source` a nul-terminated
 * string and `out` writable.
 */
enum MagmaStatus magma_eval(struct MagmaSession *session, const char *source, char **out);

/**
 * Evaluates one expression that must produce a magma.
 *
 * # Safety
 * As for [`magma_eval`].
 */
enum MagmaStatus magma_parse(struct MagmaSession *session,
                             const char *source,
                             struct MagmaMagma **out);

/**
 * # Safety
 * `m` must come from this library and not be used afterwards.
 */
void magma_free(struct MagmaMagma *m);

/**
 * # Safety
 * `m` must be a live handle; `out` writable. Release the string with
 * [`magma_string_free`].
 */
enum MagmaStatus magma_to_string(const struct MagmaMagma *m, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void magma_string_free(char *s);

/**
 * `x ⊆ y`.
 *
 * # Safety
 * Both handles must be live; `out` writable.
 */
enum MagmaStatus magma_subset(const struct MagmaMagma *x, const struct MagmaMagma *y, bool *out);

/**
 * # Safety
 * Both handles must be live; `out` writable.
 */
enum MagmaStatus magma_equal(const struct MagmaMagma *x, const struct MagmaMagma *y, bool *out);

/**
 * `x` is an element of `y`.
 *
 * # Safety
 * Both handles must be live; `out` writable.
 */
enum MagmaStatus magma_member(const struct MagmaMagma *x, const struct MagmaMagma *y, bool *out);

/**
 * # Safety
 * `x` must be live; `out` writable.
 */
enum MagmaStatus magma_pr(const struct MagmaMagma *x, struct MagmaMagma **out);

/**
 * Fails with `MAGMA_STATUS_KIND_MISMATCH` when one side is an atom-ideal
 * and the other a magma-ideal.
 *
 * # Safety
 * Both handles must be live; `out` writable.
 */
enum MagmaStatus magma_union(const struct MagmaMagma *x,
                             const struct MagmaMagma *y,
                             struct MagmaMagma **out);

/**
 * Writes null when the intersection is empty.
 *
 * # Safety
 * Both handles must be live; `out` writable.
 */
enum MagmaStatus magma_intersect(const struct MagmaMagma *x,
                                 const struct MagmaMagma *y,
                                 struct MagmaMagma **out);

/**
 * Level `omega * omega_coeff + finite`.
 *
 * # Safety
 * `x` must be live; both out-pointers writable.
 */
enum MagmaStatus magma_level(const struct MagmaMagma *x, uint64_t *omega_coeff, uint64_t *finite);

/**
 * The pair of `x` and `y` over the session's seed atoms.
 *
 * # Safety
 * All handles must be live; `out` writable.
 */
enum MagmaStatus magma_pair(const struct MagmaSession *session,
                            const struct MagmaMagma *x,
                            const struct MagmaMagma *y,
                            struct MagmaMagma **out);

/**
 * # Safety
 * Both handles must be live; `out` writable.
 */
enum MagmaStatus magma_is_pair(const struct MagmaSession *session,
                               const struct MagmaMagma *m,
                               bool *out);

/**
 * Both components of a pair; fails with `MAGMA_STATUS_NOT_A_PAIR`
 * otherwise. On failure neither out-pointer is written.
 *
 * # Safety
 * Both handles must be live; both out-pointers writable.
 */
enum MagmaStatus magma_unpair(const struct MagmaSession *session,
                              const struct MagmaMagma *p,
                              struct MagmaMagma **first,
                              struct MagmaMagma **second);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MAGMA_H */
