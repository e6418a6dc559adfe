#ifndef CUMULANTS_H
#define CUMULANTS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Partition classes accepted by [`cm_enumerate_new`].
 */
typedef enum CmClass {
  CM_CLASS_ALL = 0,
  CM_CLASS_NONCROSSING = 1,
  CM_CLASS_INTERVAL = 2,
  CM_CLASS_IRREDUCIBLE = 3,
  CM_CLASS_CONNECTED = 4,
  CM_CLASS_IRREDUCIBLE_NONCROSSING = 5,
  CM_CLASS_CONNECTED_NONCROSSING = 6,
} CmClass;

/**
 * Which block graph [`cm_partition_tutte`] evaluates.
 */
typedef enum CmGraph {
  CM_GRAPH_CROSSING = 0,
  CM_GRAPH_ANTI_INTERVAL = 1,
} CmGraph;

/**
 * Result codes.
 */
typedef enum CmStatus {
  CM_STATUS_OK = 0,
  CM_STATUS_NULL_POINTER = 1,
  CM_STATUS_INVALID_UTF8 = 2,
  CM_STATUS_INVALID_ARGUMENT = 3,
  CM_STATUS_PARSE_ERROR = 4,
  CM_STATUS_LIMIT_EXCEEDED = 5,
  CM_STATUS_UNKNOWN_IDENTITY = 6,
  CM_STATUS_IDENTITY_FAILED = 7,
  CM_STATUS_PANIC = 8,
} CmStatus;

/**
 * Opaque set partition.
 */
typedef struct CmPartition CmPartition;

/**
 * Opaque iterator over an enumerated partition class.
 */
typedef struct CmPartitionIter CmPartitionIter;

/**
 * Membership of a partition in each class.
 */
typedef struct CmClassFlags {
  bool noncrossing;
  bool interval;
  bool irreducible;
  bool connected;
} CmClassFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *cm_last_error(void);

/**
 * Library version as a static string.
 */
const char *cm_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void cm_string_free(char *s);

/**
 * Parses `"1,3|2,4"` or a JSON list of blocks.
 *
 * # Safety
 * `input` must be a nul-terminated string and `out` a writable pointer.
 */
enum CmStatus cm_partition_parse(const char *input, struct CmPartition **out);

/**
 * Releases a partition. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void cm_partition_free(struct CmPartition *p);

/**
 * Size of the ground set, or 0 for null.
 *
 * # Safety
 * `p` must be null or a live partition.
 */
uintptr_t cm_partition_n(const struct CmPartition *p);

/**
 * Number of blocks, or 0 for null.
 *
 * # Safety
 * `p` must be null or a live partition.
 */
uintptr_t cm_partition_num_blocks(const struct CmPartition *p);

/**
 * Canonical text form, blocks by minimum.
 *
 * # Safety
 * `p` must be a live partition and `out` writable.
 */
enum CmStatus cm_partition_to_string(const struct CmPartition *p, char **out);

/**
 * # Safety
 * `p` must be a live partition and `out` writable.
 */
enum CmStatus cm_partition_classify(const struct CmPartition *p, struct CmClassFlags *out);

/**
 * Coefficient of `H_π` in the classical cumulant, as a rational string.
 *
 * # Safety
 * `p` must be a live partition and `out` writable.
 */
enum CmStatus cm_partition_beta(const struct CmPartition *p, char **out);

/**
 * Tutte polynomial of a block graph at `(x, y)`, both rational strings.
 *
 * # Safety
 * `p` must be a live partition, `x` and `y` nul-terminated, `out` writable.
 */
enum CmStatus cm_partition_tutte(const struct CmPartition *p,
                                 enum CmGraph graph,
                                 const char *x,
                                 const char *y,
                                 char **out);

/**
 * Enumerates a partition class of `[n]`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CmStatus cm_enumerate_new(uintptr_t n, enum CmClass class_, struct CmPartitionIter **out);

/**
 * Total number of partitions the iterator yields, or 0 for null.
 *
 * # Safety
 * `it` must be null or a live iterator.
 */
uintptr_t cm_enumerate_len(const struct CmPartitionIter *it);

/**
 * Stores the next partition in `out`, or null once exhausted.
 *
 * # Safety
 * `it` must be a live iterator and `out` writable.
 */
enum CmStatus cm_enumerate_next(struct CmPartitionIter *it, struct CmPartition **out);

/**
 * Releases an iterator. Null is ignored.
 *
 * # Safety
 * `it` must come from this library and not have been freed.
 */
void cm_enumerate_free(struct CmPartitionIter *it);

/**
 * Converts a JSON array of rationals between `moments`, `classical`,
 * `free`, `boolean` and `monotone`; the result is a JSON array of strings.
 *
 * # Safety
 * The three inputs must be nul-terminated and `out` writable.
 */
enum CmStatus cm_convert(const char *from, const char *to, const char *values_json, char **out);

/**
 * Checks a catalog identity at order `n`; `holds` receives the verdict.
 * A failing identity still returns `Ok` with `holds = false`.
 *
 * # Safety
 * `identity` must be nul-terminated and `holds` writable.
 */
enum CmStatus cm_verify(const char *identity, uintptr_t n, bool *holds);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CUMULANTS_H */
