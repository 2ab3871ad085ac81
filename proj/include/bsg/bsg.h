/* C interface to the Baumslag-Solitar toolkit.
 *
 * Integers cross the boundary as decimal strings so that group parameters and exponents
 * keep arbitrary precision. Every function returns a bsg_status; on failure the message is
 * available from bsg_last_error() on the same thread. Strings handed out through char**
 * parameters are owned by the caller and released with bsg_string_free().
 */
#ifndef BSG_H
#define BSG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BSG_API __declspec(dllexport)
#else
#define BSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsg_status {
  BSG_OK = 0,
  BSG_ERR_INVALID_ARGUMENT,
  BSG_ERR_NOT_UNIT,
  BSG_ERR_NOT_PRIME,
  BSG_ERR_DIVISIBILITY,
  BSG_ERR_PARSE,
  BSG_ERR_INVALID_QUOTIENT,
  BSG_ERR_RELATION_VIOLATED,
  BSG_ERR_PRECONDITION,
  BSG_ERR_RESOURCE,
  BSG_ERR_BOUNDS_EXHAUSTED,
  BSG_ERR_INTERNAL
} bsg_status;

typedef enum bsg_truth { BSG_FALSE = 0, BSG_TRUE = 1, BSG_UNKNOWN = 2 } bsg_truth;

typedef enum bsg_property {
  BSG_PROP_RESIDUALLY_FINITE,
  BSG_PROP_RESIDUALLY_P,            /* one prime */
  BSG_PROP_RESIDUALLY_PI,           /* one or more primes */
  BSG_PROP_VIRTUALLY_RESIDUALLY_P,  /* one prime */
  BSG_PROP_VIRTUALLY_RESIDUALLY_PI, /* one or more primes */
  BSG_PROP_CONJUGACY_SEPARABLE,
  BSG_PROP_CONJUGACY_SEPARABLE_PI,  /* one or more primes */
  BSG_PROP_SUBGROUP_SEPARABLE
} bsg_property;

typedef struct bsg_config {
  const char* search_bound; /* decimal; NULL means 1000000 */
  size_t max_degree;        /* permutation search bound, default 8; 0 selects the default */
  size_t bit_guard;         /* largest b-exponent width during reduction, default 1000000; 0 selects the default */
} bsg_config;

typedef struct bsg_group bsg_group;
typedef struct bsg_word bsg_word;
typedef struct bsg_verdict bsg_verdict;
typedef struct bsg_witness bsg_witness;
typedef struct bsg_quotient bsg_quotient;

BSG_API void bsg_config_init(bsg_config* cfg);
BSG_API const char* bsg_last_error(void);
BSG_API const char* bsg_status_name(bsg_status status);
BSG_API void bsg_string_free(char* s);

BSG_API bsg_status bsg_group_new(const char* m, const char* n, bsg_group** out);
BSG_API void bsg_group_free(bsg_group* g);
/* {"m":..,"n":..,"canonical":{"m":..,"n":..}} */
BSG_API bsg_status bsg_group_json(const bsg_group* g, char** out);

BSG_API bsg_status bsg_word_parse(const char* text, bsg_word** out);
BSG_API void bsg_word_free(bsg_word* w);
BSG_API bsg_status bsg_word_str(const bsg_word* w, char** out);

BSG_API bsg_status bsg_reduce(const bsg_group* g, const bsg_word* w, const bsg_config* cfg, bsg_word** out);
BSG_API bsg_status bsg_is_trivial(const bsg_group* g, const bsg_word* w, const bsg_config* cfg, int* out);
BSG_API bsg_status bsg_are_equal(const bsg_group* g, const bsg_word* x, const bsg_word* y, const bsg_config* cfg,
                                 int* out);

/* Conjugacy in G(1, n); |n| >= 2 uses the exponential-congruence test, n = +-1 normal forms. */
BSG_API bsg_status bsg_is_conjugate(const char* n, const bsg_word* x, const bsg_word* y, const bsg_config* cfg,
                                    int* out);
/* {"t":..,"r":..,"inverted":bool}; requires |n| >= 2. */
BSG_API bsg_status bsg_conjugacy_form_json(const char* n, const bsg_word* w, const bsg_config* cfg, char** out);

BSG_API bsg_status bsg_classify(const bsg_group* g, bsg_property property, const char* const* primes,
                                size_t prime_count, const bsg_config* cfg, bsg_verdict** out);
BSG_API bsg_truth bsg_verdict_value(const bsg_verdict* v);
BSG_API bsg_status bsg_verdict_json(const bsg_verdict* v, char** out);
BSG_API void bsg_verdict_free(bsg_verdict* v);

/* prime may be NULL for the description of the intersection of all finite-index normal subgroups. */
BSG_API bsg_status bsg_sigma_json(const bsg_group* g, const char* prime, char** out);

BSG_API bsg_status bsg_separate_element(const bsg_group* g, const bsg_word* w, const bsg_config* cfg,
                                        bsg_witness** out);
BSG_API bsg_status bsg_separate_conjugacy(const char* n, const bsg_word* x, const bsg_word* y,
                                          const bsg_config* cfg, bsg_witness** out);
BSG_API bsg_status bsg_witness_from_json(const char* text, bsg_witness** out);
BSG_API bsg_status bsg_witness_to_json(const bsg_witness* wit, char** out);
BSG_API void bsg_witness_free(bsg_witness* wit);
/* *ok is 1 when every check passes; report is {"ok":..,"failed_check":..,"detail":..}. */
BSG_API bsg_status bsg_witness_verify(const bsg_witness* wit, int* ok, char** report);
/* Like bsg_witness_verify on raw JSON; schema problems are reported, not returned as errors. */
BSG_API bsg_status bsg_verify_json(const char* text, int* ok, char** report);

BSG_API bsg_status bsg_quotient_new(const char* n, uint64_t k, uint64_t l, bsg_quotient** out);
BSG_API void bsg_quotient_free(bsg_quotient* q);
/* Summary; with list_elements nonzero also every element a^i b^j with its order. */
BSG_API bsg_status bsg_quotient_json(const bsg_quotient* q, int list_elements, char** out);
/* b^r and b^s conjugate in the quotient. */
BSG_API bsg_status bsg_quotient_bpowers_conjugate(const bsg_quotient* q, const char* r, const char* s, int* out);

#ifdef __cplusplus
}
#endif

#endif /* BSG_H */
