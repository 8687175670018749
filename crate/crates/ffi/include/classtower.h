#ifndef CLASSTOWER_H
#define CLASSTOWER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Field kinds as returned by [`ct_classify`].
 */
typedef enum CtFieldKind {
  CT_TYPE4P = 0,
  CT_TYPE4R = 1,
  CT_TYPE_PS1 = 2,
  CT_OTHER = 3,
} CtFieldKind;

/**
 * Status codes. `CT_OK` is zero; everything else is an error.
 */
typedef enum CtStatus {
  CT_OK = 0,
  CT_NULL_POINTER = 1,
  CT_INVALID_ARGUMENT = 2,
  CT_NOT_FUNDAMENTAL = 3,
  CT_NOT_IMAGINARY = 4,
  CT_UNSUPPORTED_KIND = 5,
  CT_BOUND_EXCEEDED = 6,
  CT_STRUCTURE_MISMATCH = 7,
  CT_BUFFER_TOO_SMALL = 8,
  CT_INTERNAL = 9,
  CT_PANIC = 10,
} CtStatus;

/**
 * Opaque handle to a group `Γ_{n,m,ε}`.
 */
typedef struct CtGroup CtGroup;

typedef struct CtInvariants {
  uint32_t n;
  uint32_t m;
  uint64_t h2_k;
  uint64_t h2_minus4p;
} CtInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code; unknown codes get a generic text.
 * Never free the result.
 */
const char *ct_status_message(int32_t status);

/**
 * Classifies `d`. `primes` receives up to `cap` prime data (`p, q, q'` for
 * Types 4p/4r); `*len` is set to the full count even when it exceeds `cap`.
 *
 * # Safety
 * `kind` and `len` must be valid for writes; `primes` must be valid for
 * `cap` writes or be null with `cap == 0`.
 */
enum CtStatus ct_classify(int64_t d,
                          enum CtFieldKind *kind,
                          int64_t *primes,
                          size_t cap,
                          size_t *len);

/**
 * `(n, m)` and the 2-class numbers of a Type 4p or 4r field. `bound == 0`
 * uses the library default.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CtStatus ct_invariants(int64_t d, uint64_t bound, struct CtInvariants *out);

/**
 * The tower report of `predict` (`crosscheck == false`) or `crosscheck` as
 * JSON. `*all_pass` is 1 when every check line passed. Free `*json` with
 * [`ct_string_free`].
 *
 * # Safety
 * `json` and `all_pass` must be valid for writes.
 */
enum CtStatus ct_tower_report_json(int64_t d, bool crosscheck, char **json, int32_t *all_pass);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ct_string_free(char *s);

/**
 * Builds `Γ_{n,m,ε}`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CtStatus ct_group_new(uint32_t n, uint32_t m, uint8_t eps, struct CtGroup **out);

/**
 * Releases a group handle. Null is ignored.
 *
 * # Safety
 * `g` must come from [`ct_group_new`] and not have been freed.
 */
void ct_group_free(struct CtGroup *g);

/**
 * Group order, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t ct_group_order(const struct CtGroup *g);

/**
 * Product of two normal-form exponent vectors `[e1, e2, e3, f1, f2]`.
 *
 * # Safety
 * `g` must be a live handle; `x`, `y` and `out` must each point to 5 `u32`.
 */
enum CtStatus ct_group_mul(const struct CtGroup *g,
                           const uint32_t *x,
                           const uint32_t *y,
                           uint32_t *out);

/**
 * Invariant factors of `G/G'` (`derived == false`) or of `G'`, nonincreasing.
 *
 * # Safety
 * `g` must be a live handle, `len` valid for writes and `out` valid for
 * `cap` writes (or null with `cap == 0`).
 */
enum CtStatus ct_group_abelian_type(const struct CtGroup *g,
                                    bool derived,
                                    uint64_t *out,
                                    size_t cap,
                                    size_t *len);

/**
 * Order of the kernel of the transfer from `H_2` to `H_1 ∩ H_2`.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for writes.
 */
enum CtStatus ct_group_lemma5_kernel_order(const struct CtGroup *g, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLASSTOWER_H */
