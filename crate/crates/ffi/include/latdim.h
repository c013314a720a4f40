#ifndef LATDIM_H
#define LATDIM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LatdimKind {
  LATDIM_KIND_KDIM = 0,
  LATDIM_KIND_JDIM = 1,
  LATDIM_KIND_HDIM = 2,
} LatdimKind;

/**
 * Values match the CLI exit codes.
 */
typedef enum LatdimOutcome {
  LATDIM_OUTCOME_HOLDS = 0,
  LATDIM_OUTCOME_FAILS = 1,
  LATDIM_OUTCOME_UNKNOWN = 3,
} LatdimOutcome;

typedef enum LatdimStatus {
  LATDIM_STATUS_OK = 0,
  LATDIM_STATUS_NULL_POINTER = 1,
  LATDIM_STATUS_INVALID_UTF8 = 2,
  LATDIM_STATUS_PARSE = 3,
  LATDIM_STATUS_INVALID = 4,
  LATDIM_STATUS_CEILING_EXCEEDED = 5,
  LATDIM_STATUS_RING = 6,
  LATDIM_STATUS_UNDECIDED = 7,
  LATDIM_STATUS_IO = 8,
  LATDIM_STATUS_PANIC = 9,
} LatdimStatus;

/**
 * A finitely presented distributive lattice.
 */
typedef struct LatdimLattice LatdimLattice;

/**
 * A ring parsed from a descriptor.
 */
typedef struct LatdimRing LatdimRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *latdim_last_error(void);

/**
 * Library version as a static string.
 */
const char *latdim_version(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void latdim_string_free(char *s);

/**
 * Parses a presentation in the JSON format read by the CLI.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LatdimStatus latdim_lattice_from_json(const char *json, struct LatdimLattice **out);

/**
 * # Safety
 * `t` must be NULL or a handle from this library, not yet freed.
 */
void latdim_lattice_free(struct LatdimLattice *t);

/**
 * Number of distinct elements.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LatdimStatus latdim_lattice_element_count(const struct LatdimLattice *t, size_t *out);

/**
 * Decides `dim ≤ leq` for the given kind.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LatdimStatus latdim_lattice_dim_leq(const struct LatdimLattice *t,
                                         enum LatdimKind kind,
                                         int64_t leq,
                                         enum LatdimOutcome *out);

/**
 * Krull dimension from the prime spectrum; -1 for the trivial lattice.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LatdimStatus latdim_lattice_kdim(const struct LatdimLattice *t, int64_t *out);

/**
 * Spectrum as JSON `{"points": [...], "order": [[i, j], ...]}`. `what` is
 * one of spec, max, min, jspec, Jspec. Free the result with
 * `latdim_string_free`.
 *
 * # Safety
 * `t` must be a live handle, `what` a NUL-terminated string and `out` writable.
 */
enum LatdimStatus latdim_lattice_spectrum_json(const struct LatdimLattice *t,
                                               const char *what,
                                               char **out);

/**
 * Parses `int`, `zmod:<n>`, `gf:<p>`, `poly:gf:<p>` or `table:<file>`.
 *
 * # Safety
 * `desc` must be a NUL-terminated string; `out` must be writable.
 */
enum LatdimStatus latdim_ring_parse(const char *desc, struct LatdimRing **out);

/**
 * # Safety
 * `r` must be NULL or a handle from this library, not yet freed.
 */
void latdim_ring_free(struct LatdimRing *r);

/**
 * Decides `dim ≤ leq` for a ring. Searches over infinite rings use the
 * default budget with the given seed and may answer `Unknown`.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum LatdimStatus latdim_ring_dim_leq(const struct LatdimRing *r,
                                      enum LatdimKind kind,
                                      int64_t leq,
                                      uint64_t seed,
                                      enum LatdimOutcome *out);

/**
 * Runs one check suite (oracle, boundary, duality, ring-transport) with
 * default sizes. `passed` receives 1 when every property holds.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `passed` must be writable.
 */
enum LatdimStatus latdim_check(const char *suite, uint64_t seed, int32_t *passed);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LATDIM_H */
