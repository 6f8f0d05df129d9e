/*
 * mulrep: C interface.
 *
 * Every object is an opaque handle created by a *_parse / *_create style
 * call and released with the matching *_free. Functions return a
 * mulrep_status; on failure a message for the calling thread is available
 * from mulrep_last_error(). Strings returned through char** are allocated by
 * the library and released with mulrep_string_free().
 */
#ifndef MULREP_H
#define MULREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(MULREP_BUILDING_LIBRARY)
#define MULREP_API __attribute__((visibility("default")))
#else
#define MULREP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mulrep_status {
  MULREP_OK = 0,
  MULREP_ERR_INVALID_ARGUMENT = 1,
  MULREP_ERR_PARSE = 2,
  MULREP_ERR_OVERFLOW = 3,
  MULREP_ERR_RESOURCE_LIMIT = 4,
  MULREP_ERR_FACTORIZATION_LIMIT = 5,
  MULREP_ERR_NOT_SQUAREFREE = 6,
  MULREP_ERR_BUDGET_EXHAUSTED = 7,
  MULREP_ERR_INTERNAL = 8
} mulrep_status;

typedef enum mulrep_format { MULREP_FORMAT_TEXT = 0, MULREP_FORMAT_JSON = 1, MULREP_FORMAT_CSV = 2 } mulrep_format;

typedef enum mulrep_strategy {
  MULREP_STRATEGY_SQUAREFREE_RICH = 0,
  MULREP_STRATEGY_EXHAUSTIVE_SCAN = 1,
  MULREP_STRATEGY_HYBRID = 2
} mulrep_strategy;

typedef struct mulrep_set mulrep_set;
typedef struct mulrep_system mulrep_system;
typedef struct mulrep_witness mulrep_witness;
typedef struct mulrep_family mulrep_family;
typedef struct mulrep_construction mulrep_construction;
typedef struct mulrep_coloring mulrep_coloring;

MULREP_API const char* mulrep_version(void);
MULREP_API const char* mulrep_status_string(mulrep_status status);
/* Message of the last failure on this thread; "" if none. */
MULREP_API const char* mulrep_last_error(void);
MULREP_API void mulrep_string_free(char* s);

/* ---- integer sets ------------------------------------------------------ */

MULREP_API mulrep_status mulrep_set_parse(const char* text, mulrep_set** out);
MULREP_API void mulrep_set_free(mulrep_set* set);
MULREP_API mulrep_status mulrep_set_contains(const mulrep_set* set, uint64_t n, int* out);
/* Writes up to buf_len members <= n_max into buf (may be NULL) and the full
   member count into *count. */
MULREP_API mulrep_status mulrep_set_enumerate(const mulrep_set* set, uint64_t n_max, uint64_t* buf, size_t buf_len,
                                              size_t* count);
MULREP_API mulrep_status mulrep_set_describe(const mulrep_set* set, char** out);

/* ---- multiplicative systems -------------------------------------------- */

/* Accepts construction shorthand (fundamental:h=2, one-t:h=2,t=3, one-inf:h=2,
   s-inf:h=3,s=2), System(<set>, ...) and Basis(<set>, h=k). */
MULREP_API mulrep_status mulrep_system_parse(const char* text, mulrep_system** out);
MULREP_API mulrep_status mulrep_system_from_parts(const mulrep_set* const* parts, size_t h, mulrep_system** out);
MULREP_API void mulrep_system_free(mulrep_system* system);
MULREP_API size_t mulrep_system_order(const mulrep_system* system);
MULREP_API mulrep_status mulrep_system_describe(const mulrep_system* system, char** out);

/* ---- representation counts --------------------------------------------- */

MULREP_API mulrep_status mulrep_count(const mulrep_system* system, uint64_t n, size_t tuple_cap, mulrep_witness** out);
MULREP_API void mulrep_witness_free(mulrep_witness* w);
MULREP_API uint64_t mulrep_witness_n(const mulrep_witness* w);
MULREP_API uint64_t mulrep_witness_count(const mulrep_witness* w);
MULREP_API size_t mulrep_witness_order(const mulrep_witness* w);
MULREP_API size_t mulrep_witness_tuple_count(const mulrep_witness* w);
MULREP_API int mulrep_witness_truncated(const mulrep_witness* w);
/* Copies tuple `index` (order() entries) into out. */
MULREP_API mulrep_status mulrep_witness_tuple(const mulrep_witness* w, size_t index, uint64_t* out, size_t out_len);
MULREP_API mulrep_status mulrep_witness_render(const mulrep_witness* w, mulrep_format format, char** out);

MULREP_API mulrep_status mulrep_count_additive(const mulrep_set* set, unsigned h, uint64_t n, uint64_t* out);

typedef struct mulrep_window_stats {
  uint64_t lo;
  uint64_t hi;
  uint64_t min_count;
  uint64_t argmin;
  uint64_t max_count;
  uint64_t argmax;
} mulrep_window_stats;

/* threads == 0: use all hardware threads. Results do not depend on it. */
MULREP_API mulrep_status mulrep_window(const mulrep_system* system, uint64_t lo, uint64_t hi, unsigned threads,
                                       mulrep_window_stats* out);
MULREP_API mulrep_status mulrep_window_render(const mulrep_window_stats* stats, mulrep_format format, char** out);
/* Per-n counts over [lo, hi]; CSV columns n,count. */
MULREP_API mulrep_status mulrep_scan_render(const mulrep_system* system, uint64_t lo, uint64_t hi, unsigned threads,
                                            mulrep_format format, char** out);

/* ---- squarefree integers and prime sets -------------------------------- */

/* Prime divisors of squarefree q, ascending; *count gets the full size. */
MULREP_API mulrep_status mulrep_phi(uint64_t q, uint64_t* primes, size_t primes_len, size_t* count);
MULREP_API mulrep_status mulrep_phi_inverse(const uint64_t* primes, size_t count, uint64_t* out);
MULREP_API mulrep_status mulrep_omega(uint64_t n, unsigned* out);
MULREP_API mulrep_status mulrep_partitions_render(uint64_t q, unsigned h, size_t cap, mulrep_format format, char** out,
                                                  size_t* count);

/* ---- set partitions ---------------------------------------------------- */

MULREP_API mulrep_status mulrep_multinomial(unsigned n, const unsigned* ks, size_t h, uint64_t* out);
MULREP_API mulrep_status mulrep_family_parse(const char* text, mulrep_family** out);
MULREP_API void mulrep_family_free(mulrep_family* family);
MULREP_API mulrep_status mulrep_count_covers(const uint64_t* elements, size_t n, const mulrep_family* const* families,
                                             size_t h, uint64_t* out);

typedef struct mulrep_correspondence {
  uint64_t system_count;
  uint64_t cover_count;
  int equal;
} mulrep_correspondence;

/* universe_len == 0 takes phi(q) as the prime universe. */
MULREP_API mulrep_status mulrep_correspondence_check(const mulrep_system* system, uint64_t q, const uint64_t* universe,
                                                     size_t universe_len, mulrep_correspondence* out);
MULREP_API mulrep_status mulrep_correspondence_render(uint64_t q, const mulrep_correspondence* result,
                                                      mulrep_format format, char** out);

/* ---- named constructions ----------------------------------------------- */

MULREP_API mulrep_status mulrep_construction_parse(const char* text, mulrep_construction** out);
MULREP_API void mulrep_construction_free(mulrep_construction* c);
MULREP_API mulrep_status mulrep_construction_system(const mulrep_construction* c, mulrep_system** out);
MULREP_API mulrep_status mulrep_construction_claimed(const mulrep_construction* c, uint64_t* s, uint64_t* t,
                                                     int* t_infinite);
MULREP_API mulrep_status mulrep_construction_closed_form(const mulrep_construction* c, uint64_t n, uint64_t* out);
/* *passed is 1 when every check agrees; the report is always produced. */
MULREP_API mulrep_status mulrep_catalog_verify(const mulrep_construction* c, uint64_t scan_bound, unsigned threads,
                                               mulrep_format format, int* passed, char** report);
MULREP_API mulrep_status mulrep_mh_table(unsigned h, uint64_t t_cutoff, mulrep_format format, char** out);

/* ---- witness search ---------------------------------------------------- */

typedef struct mulrep_search_budget {
  uint64_t max_candidates;
  uint64_t max_n;
  mulrep_strategy strategy;
} mulrep_search_budget;

typedef struct mulrep_search_result {
  int found;
  uint64_t n;
  uint64_t count;
  uint64_t candidates_tried;
  uint64_t max_count_seen;
  uint64_t argmax;
} mulrep_search_result;

/* report may be NULL. */
MULREP_API mulrep_status mulrep_find_witness(const mulrep_system* system, uint64_t target,
                                             const mulrep_search_budget* budget, unsigned threads,
                                             mulrep_search_result* out, mulrep_format format, char** report);

/* ---- Ramsey engine ----------------------------------------------------- */

MULREP_API mulrep_status mulrep_coloring_parse(const char* text, mulrep_coloring** out);
MULREP_API mulrep_status mulrep_coloring_random(size_t ground_size, unsigned k, uint32_t colors, uint64_t seed,
                                                mulrep_coloring** out);
MULREP_API void mulrep_coloring_free(mulrep_coloring* c);
MULREP_API size_t mulrep_coloring_ground_size(const mulrep_coloring* c);
MULREP_API unsigned mulrep_coloring_k(const mulrep_coloring* c);
MULREP_API mulrep_status mulrep_coloring_render(const mulrep_coloring* c, char** out);
MULREP_API mulrep_status mulrep_product_coloring(const mulrep_coloring* const* factors, size_t count,
                                                 mulrep_coloring** out);

/* subset must hold m entries; *found is 0 when no homogeneous m-subset exists.
   max_nodes == 0 selects the default budget. */
MULREP_API mulrep_status mulrep_find_homogeneous(const mulrep_coloring* c, size_t m, uint64_t max_nodes,
                                                 uint64_t* subset, int* found);
MULREP_API mulrep_status mulrep_is_homogeneous(const mulrep_coloring* c, const uint64_t* subset, size_t len, int* out);
MULREP_API mulrep_status mulrep_homogeneous_render(const mulrep_coloring* c, size_t m, uint64_t max_nodes,
                                                   mulrep_format format, int* found, char** out);

/* per_level[k] colors k-subsets, k = 0..levels-1. */
MULREP_API mulrep_status mulrep_iterated_chain(const mulrep_coloring* const* per_level, size_t levels,
                                               const size_t* sizes, uint64_t max_nodes, mulrep_format format,
                                               int* found, char** report);
/* colorings is the concatenation of the factor lists of each level;
   index_counts[k] factors belong to level k. */
MULREP_API mulrep_status mulrep_doubly_iterated_chain(const mulrep_coloring* const* colorings,
                                                      const size_t* index_counts, size_t levels, const size_t* sizes,
                                                      uint64_t max_nodes, mulrep_format format, int* found,
                                                      char** report);

MULREP_API mulrep_status mulrep_ramsey_random_trials(size_t ground_size, unsigned k, uint32_t colors, size_t m,
                                                     uint64_t trials, uint64_t seed, uint64_t max_nodes,
                                                     uint64_t* found, uint64_t* checker_failures);

#ifdef __cplusplus
}
#endif

#endif /* MULREP_H */
