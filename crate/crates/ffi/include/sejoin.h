#ifndef SEJOIN_H
#define SEJOIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SejoinStatus {
  SEJOIN_STATUS_OK = 0,
  SEJOIN_STATUS_NULL_POINTER = 1,
  SEJOIN_STATUS_INVALID_ARGUMENT = 2,
  SEJOIN_STATUS_UNSUPPORTED = 3,
  SEJOIN_STATUS_OVERFLOW = 4,
  SEJOIN_STATUS_INVARIANT = 5,
  SEJOIN_STATUS_OUT_OF_RANGE = 6,
  SEJOIN_STATUS_PANIC = 7,
} SejoinStatus;

typedef enum SejoinAdmissibility {
  SEJOIN_ADMISSIBILITY_YES = 0,
  SEJOIN_ADMISSIBILITY_NO = 1,
  SEJOIN_ADMISSIBILITY_UNKNOWN = 2,
} SejoinAdmissibility;

typedef enum SejoinVerdict {
  SEJOIN_VERDICT_EQUIVALENT = 0,
  SEJOIN_VERDICT_INEQUIVALENT = 1,
  SEJOIN_VERDICT_UNDETERMINED = 2,
} SejoinVerdict;

typedef enum SejoinCaseTag {
  SEJOIN_CASE_TAG_P0 = 0,
  SEJOIN_CASE_TAG_P1 = 1,
} SejoinCaseTag;

/**
 * Opaque classified-family handle.
 */
typedef struct SejoinFamily SejoinFamily;

/**
 * Opaque join handle.
 */
typedef struct SejoinJoin SejoinJoin;

/**
 * One member of a classified family.
 */
typedef struct SejoinFamilyMember {
  uint64_t w1;
  uint64_t w2;
  enum SejoinCaseTag case_tag;
  uint64_t l1;
  uint64_t l2;
  uint64_t h4_order;
  /**
   * Sign-normalized representative of `l2^3` modulo `h4_order`.
   */
  uint64_t invariant;
  /**
   * Homotopy class id, or -1 when the family is undetermined.
   */
  int64_t class_id;
} SejoinFamilyMember;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next failing call on the same thread.
 */
const char *sejoin_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sejoin_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void sejoin_string_free(char *s);

/**
 * Builds the join of `base` (e.g. `"CP2"`, `"dP:3"`, `"S7"`) with `w` at its
 * relative Fano indices.
 *
 * # Safety
 * `base` must be a valid NUL-terminated string; `out` must be valid for writes.
 */
enum SejoinStatus sejoin_join_new(const char *base,
                                  uint64_t w1,
                                  uint64_t w2,
                                  struct SejoinJoin **out);

/**
 * # Safety
 * `join` must be null or a handle from [`sejoin_join_new`], not yet freed.
 */
void sejoin_join_free(struct SejoinJoin *join);

/**
 * # Safety
 * `join` must be a live handle; `l1` and `l2` must be valid for writes.
 */
enum SejoinStatus sejoin_join_indices(const struct SejoinJoin *join, uint64_t *l1, uint64_t *l2);

/**
 * Cohomology report as canonical JSON; free with [`sejoin_string_free`].
 *
 * # Safety
 * `join` must be a live handle; `out` must be valid for writes.
 */
enum SejoinStatus sejoin_join_cohomology_json(const struct SejoinJoin *join, char **out);

/**
 * # Safety
 * `join` must be a live handle; `out` must be valid for writes.
 */
enum SejoinStatus sejoin_join_admissibility(const struct SejoinJoin *join,
                                            enum SejoinAdmissibility *out);

/**
 * Representative of the class of `a^3` in `(Z/m)^* / {±1}`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SejoinStatus sejoin_signed_cube_class(uint64_t a, uint64_t m, uint64_t *out);

/**
 * Homotopy verdict for the `S^5` joins with weights `a` and `b`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SejoinStatus sejoin_homotopy_equivalent(uint64_t a1,
                                             uint64_t a2,
                                             uint64_t b1,
                                             uint64_t b2,
                                             enum SejoinVerdict *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum SejoinStatus sejoin_family_classify(uint64_t product, struct SejoinFamily **out);

/**
 * Number of members, or 0 for a null handle.
 *
 * # Safety
 * `family` must be null or a live handle.
 */
size_t sejoin_family_len(const struct SejoinFamily *family);

/**
 * # Safety
 * `family` must be a live handle; `out` must be valid for writes.
 */
enum SejoinStatus sejoin_family_member(const struct SejoinFamily *family,
                                       size_t index,
                                       struct SejoinFamilyMember *out);

/**
 * # Safety
 * `family` must be null or a handle from [`sejoin_family_classify`], not yet freed.
 */
void sejoin_family_free(struct SejoinFamily *family);

/**
 * Full search report for `W <= max_w` as canonical JSON; free with
 * [`sejoin_string_free`]. The result does not depend on `shards`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SejoinStatus sejoin_search_json(uint64_t max_w, size_t shards, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEJOIN_H */
