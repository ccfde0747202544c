#ifndef NZFLOW_H
#define NZFLOW_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call. The first four match the command-line exit codes.
typedef enum NzfStatus {
  NZF_STATUS_OK = 0,
  // No nowhere-zero flow exists.
  NZF_STATUS_NO_FLOW = 1,
  // Malformed input or a failed validation.
  NZF_STATUS_INVALID = 2,
  // A theorem hypothesis does not hold for the input.
  NZF_STATUS_HYPOTHESIS = 3,
  // A required pointer argument was null or not valid UTF-8.
  NZF_STATUS_BAD_ARGUMENT = 4,
  // An internal error or a caught panic.
  NZF_STATUS_INTERNAL = 5,
} NzfStatus;

typedef struct NzfFlow NzfFlow;

typedef struct NzfGraph NzfGraph;

typedef struct NzfGroup NzfGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until
// the next call on this thread.
const char *nzf_last_error(void);

// Free a string returned by this library.
//
// # Safety
// `s` must come from this library and not be freed twice.
void nzf_string_free(char *s);

// Build a graph on `n` vertices from `m` edges given as `2m` endpoints.
//
// # Safety
// `endpoints` must point to `2 * m` values; `graph` must be writable.
enum NzfStatus nzf_graph_new(size_t n, const size_t *endpoints, size_t m, struct NzfGraph **graph);

// Parse the `graph <n>` / `u v` text format.
//
// # Safety
// `src` must be a nul-terminated string; `graph` must be writable.
enum NzfStatus nzf_graph_parse(const char *src, struct NzfGraph **graph);

// # Safety
// `g` must be null or a live handle.
void nzf_graph_free(struct NzfGraph *g);

// # Safety
// `g` must be a live handle.
size_t nzf_graph_edge_count(const struct NzfGraph *g);

// # Safety
// `g` must be a live handle.
size_t nzf_graph_vertex_count(const struct NzfGraph *g);

// Create a group from a descriptor such as `z:4` or `gf:2:2`.
//
// # Safety
// `desc` must be a nul-terminated string; `group` must be writable.
enum NzfStatus nzf_group_new(const char *desc, struct NzfGroup **group);

// # Safety
// `a` must be null or a live handle.
void nzf_group_free(struct NzfGroup *a);

// # Safety
// `a` must be a live handle.
uint32_t nzf_group_order(const struct NzfGroup *a);

// # Safety
// `f` must be null or a live handle.
void nzf_flow_free(struct NzfFlow *f);

// Tail vertex and value index of edge `e`.
//
// # Safety
// `f` must be a live handle; `tail` and `value` must be writable.
enum NzfStatus nzf_flow_edge(const struct NzfFlow *f, size_t e, size_t *tail, uint32_t *value);

// The flow in the `flow <group>` text format; free with
// [`nzf_string_free`].
//
// # Safety
// `f` must be a live handle; `dst` must be writable.
enum NzfStatus nzf_flow_to_text(const struct NzfFlow *f, char **dst);

// Parse a flow for `g` from the `flow <group>` text format.
//
// # Safety
// `g` must be a live handle, `src` nul-terminated, `flow` writable.
enum NzfStatus nzf_flow_parse(const struct NzfGraph *g, const char *src, struct NzfFlow **flow);

// Set `valid` and `nowhere_zero` to 0 or 1.
//
// # Safety
// Handles must be live; output pointers writable.
enum NzfStatus nzf_verify(const struct NzfGraph *g,
                          const struct NzfFlow *f,
                          int32_t *valid,
                          int32_t *nowhere_zero);

// Search for a nowhere-zero flow. Returns `NZF_STATUS_NO_FLOW` when none
// exists; `candidates` (optional) receives the number of coordinate
// vectors examined, saturated to 64 bits.
//
// # Safety
// Handles must be live; `flow` writable; `candidates` null or writable.
enum NzfStatus nzf_search(const struct NzfGraph *g,
                          const struct NzfGroup *a,
                          struct NzfFlow **flow,
                          uint64_t *candidates);

// Number of flows (zeros allowed); fails if it exceeds 64 bits.
//
// # Safety
// Handles must be live; `count` writable.
enum NzfStatus nzf_count(const struct NzfGraph *g, const struct NzfGroup *a, uint64_t *count);

// Glue two sides sharing at most `q - 2` edges over a field of order `q`.
// Side flows are searched for.
//
// # Safety
// Handles must be live; id arrays must hold `n1`/`n2` values; `flow`
// writable.
enum NzfStatus nzf_glue(const struct NzfGraph *g,
                        const struct NzfGroup *a,
                        const size_t *s1,
                        size_t n1,
                        const size_t *s2,
                        size_t n2,
                        struct NzfFlow **flow);

// A 4-flow on the union of two sides sharing at most three edges, three
// of them connected.
//
// # Safety
// As [`nzf_glue`].
enum NzfStatus nzf_glue_four(const struct NzfGraph *g,
                             const size_t *s1,
                             size_t n1,
                             const size_t *s2,
                             size_t n2,
                             struct NzfFlow **flow);

// A 4-flow for a graph whose every edge lies on a cycle of length at
// most 4.
//
// # Safety
// `g` must be a live handle; `flow` writable.
enum NzfStatus nzf_cover4(const struct NzfGraph *g, struct NzfFlow **flow);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NZFLOW_H */
