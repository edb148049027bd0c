/* SPDX-License-Identifier: Apache-2.0 */

#ifndef STEINER_H
#define STEINER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a library call.
typedef enum SteinerStatus {
  STEINER_STATUS_OK = 0,
  STEINER_STATUS_NULL_POINTER = 1,
  STEINER_STATUS_INVALID_ARGUMENT = 2,
  STEINER_STATUS_PARSE_ERROR = 3,
  STEINER_STATUS_DISCONNECTED = 4,
  STEINER_STATUS_OUT_OF_RANGE = 5,
  STEINER_STATUS_LIMIT_EXCEEDED = 6,
  STEINER_STATUS_CONSTRAINT_VIOLATED = 7,
  STEINER_STATUS_PANIC = 8,
} SteinerStatus;

// Graph families accepted by `steiner_family_generate`, in the order of
// `Family::ALL`.
typedef enum SteinerFamily {
  STEINER_FAMILY_H1 = 0,
  STEINER_FAMILY_H2 = 1,
  STEINER_FAMILY_H3 = 2,
  STEINER_FAMILY_H4 = 3,
  STEINER_FAMILY_T = 4,
  STEINER_FAMILY_DELTA = 5,
  STEINER_FAMILY_DELTA_PRIME = 6,
  STEINER_FAMILY_G1 = 7,
  STEINER_FAMILY_G2 = 8,
  STEINER_FAMILY_G3 = 9,
} SteinerFamily;

// Opaque graph handle.
typedef struct SteinerGraph SteinerGraph;

// Verdicts of the `sdiam_4` classifier for one graph.
typedef struct SteinerClassification {
  size_t n;
  size_t min_degree;
  size_t sdiam4;
  size_t non_cut;
  bool thm2;
  bool thm3;
  bool thm3_condition_i;
  bool thm3_condition_ii;
  // Which of `H1..H4` span the complement.
  bool spanning[4];
  bool lemma1;
  bool consistent;
} SteinerClassification;

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`2 * edge_count` entries). Duplicate edges collapse.
//
// # Safety
// `edges` must be valid for `2 * edge_count` reads (it may be null when
// `edge_count` is 0) and `out` valid for one write.
enum SteinerStatus steiner_graph_new(size_t n,
                                     const size_t *edges,
                                     size_t edge_count,
                                     struct SteinerGraph **out);

// Decodes one graph6 line.
//
// # Safety
// `text` must be a NUL-terminated string and `out` valid for one write.
enum SteinerStatus steiner_graph_from_graph6(const char *text, struct SteinerGraph **out);

// Releases a graph handle; null is ignored.
//
// # Safety
// `g` must be null or a handle from this library that has not been freed.
void steiner_graph_free(struct SteinerGraph *g);

// # Safety
// `g` must be a live handle and `out` valid for one write.
enum SteinerStatus steiner_graph_order(const struct SteinerGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` valid for one write.
enum SteinerStatus steiner_graph_size(const struct SteinerGraph *g, size_t *out);

// Encodes the graph as graph6; release the string with `steiner_string_free`.
//
// # Safety
// `g` must be a live handle and `out` valid for one write.
enum SteinerStatus steiner_graph_to_graph6(const struct SteinerGraph *g, char **out);

// Releases a string returned by this library; null is ignored.
//
// # Safety
// `s` must be null or a string from this library that has not been freed.
void steiner_string_free(char *s);

// Steiner distance of `count` terminals. `*reachable` is false when the
// terminals span several components, in which case `*value` is 0.
//
// # Safety
// `g` must be a live handle, `terminals` valid for `count` reads, and both
// out-pointers valid for one write.
enum SteinerStatus steiner_distance(const struct SteinerGraph *g,
                                    const size_t *terminals,
                                    size_t count,
                                    size_t *value,
                                    bool *reachable);

// Steiner `k`-diameter of a connected graph.
//
// # Safety
// `g` must be a live handle and `out` valid for one write.
enum SteinerStatus steiner_sdiam(const struct SteinerGraph *g, size_t k, size_t *out);

// Steiner `k`-radius of a connected graph.
//
// # Safety
// `g` must be a live handle and `out` valid for one write.
enum SteinerStatus steiner_srad(const struct SteinerGraph *g, size_t k, size_t *out);

// Steiner Wiener index `SW_k` of a connected graph.
//
// # Safety
// `g` must be a live handle and `out` valid for one write.
enum SteinerStatus steiner_wiener(const struct SteinerGraph *g, size_t k, uint64_t *out);

// Average Steiner distance `mu_k` as a reduced fraction.
//
// # Safety
// `g` must be a live handle and both out-pointers valid for one write.
enum SteinerStatus steiner_average(const struct SteinerGraph *g,
                                   size_t k,
                                   uint64_t *numerator,
                                   uint64_t *denominator);

// Classifies a connected graph of order at least 5.
//
// # Safety
// `g` must be a live handle and `out` valid for one write.
enum SteinerStatus steiner_classify(const struct SteinerGraph *g,
                                    struct SteinerClassification *out);

// Builds a member of a named family with parameters `a, b, c, d` and order `n`.
// `family` is a `SteinerFamily` value; other codes give `INVALID_ARGUMENT`.
//
// # Safety
// `out` must be valid for one write.
enum SteinerStatus steiner_family_generate(uint32_t family,
                                           size_t a,
                                           size_t b,
                                           size_t c,
                                           size_t d,
                                           size_t n,
                                           struct SteinerGraph **out);

// Message for the most recent failure on the calling thread, or an empty
// string. The pointer stays valid until the next failing call on this thread.
const char *steiner_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *steiner_version(void);

#endif  /* STEINER_H */
