/* C interface to the prek partition library.
 *
 * All state lives behind opaque handles. Every call returns a prek_status;
 * on failure the context keeps a human-readable message retrievable with
 * prek_context_last_error(). Reports own their rendered text, which stays
 * valid until the report is destroyed.
 */
#ifndef PREK_PREK_H
#define PREK_PREK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PREK_BUILDING_LIBRARY)
#    define PREK_API __declspec(dllexport)
#  else
#    define PREK_API __declspec(dllimport)
#  endif
#else
#  define PREK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct prek_context prek_context;
typedef struct prek_report prek_report;

typedef enum prek_status {
    PREK_OK = 0,
    PREK_ERR_INVALID_ARGUMENT = 1,
    PREK_ERR_NULL_POINTER = 2,
    PREK_ERR_IO = 3,
    PREK_ERR_LIMIT = 4,
    PREK_ERR_INTERNAL = 5
} prek_status;

typedef enum prek_format {
    PREK_FORMAT_TABLE = 0,
    PREK_FORMAT_JSON = 1,
    PREK_FORMAT_CSV = 2
} prek_format;

/* Outcome of the property a report checks. Reports that only compute
 * (map, collide, family, census) are PREK_VERDICT_NONE unless they carry
 * a validation. */
typedef enum prek_verdict {
    PREK_VERDICT_NONE = -1,
    PREK_VERDICT_VIOLATED = 0,
    PREK_VERDICT_HOLDS = 1
} prek_verdict;

/* Pass as a length filter to consider partitions of every length. */
#define PREK_ALL_LENGTHS 0u

typedef enum prek_family_kind {
    PREK_FAMILY_ALPHA_BETA = 0,    /* uses k */
    PREK_FAMILY_SCALED_TRIPLE = 1, /* uses m */
    PREK_FAMILY_COPRIME_TRIPLE = 2,/* uses m */
    PREK_FAMILY_PQ = 3             /* uses p, q, m, k */
} prek_family_kind;

typedef struct prek_family_params {
    prek_family_kind kind;
    uint64_t p;
    uint64_t q;
    uint64_t m;
    uint64_t k;
} prek_family_params;

PREK_API const char* prek_version(void);
PREK_API const char* prek_status_string(prek_status status);

PREK_API prek_status prek_context_create(prek_context** out);
PREK_API void prek_context_destroy(prek_context* ctx);
/* NULL or "" restores the default resolution (PREK_CACHE_DIR, then the
 * platform cache directory). */
PREK_API prek_status prek_context_set_cache_dir(prek_context* ctx, const char* dir);
/* Resolved cache directory; valid until the next call on ctx. */
PREK_API const char* prek_context_cache_dir(prek_context* ctx);
PREK_API prek_status prek_context_set_jobs(prek_context* ctx, unsigned jobs);
PREK_API const char* prek_context_last_error(const prek_context* ctx);
/* Cache diagnostics from the most recent sweep ("" when none). */
PREK_API const char* prek_context_last_warnings(const prek_context* ctx);

/* pre_k of the partition given as comma-separated positive integers. */
PREK_API prek_status prek_map(prek_context* ctx, const char* parts, uint64_t k, prek_report** out);

PREK_API prek_status prek_collide(prek_context* ctx, uint64_t n, uint64_t k, uint64_t length_filter,
                                  prek_report** out);

/* Cached, resumable sweep over n in [n_from, n_to]. */
PREK_API prek_status prek_sweep(prek_context* ctx, uint64_t n_from, uint64_t n_to, uint64_t k,
                                 uint64_t length_filter, prek_report** out);

PREK_API prek_status prek_family(prek_context* ctx, const prek_family_params* params, prek_report** out);

/* Census records for n in [1, n_max]. */
PREK_API prek_status prek_census(prek_context* ctx, uint64_t n_max, prek_report** out);

/* suite: thm1, thm3, thm4, thm5, conj12, problem1, problem3, laws, all.
 * n_max == 0 selects the suite's default bound. */
PREK_API prek_status prek_verify(prek_context* ctx, const char* suite, uint64_t n_max, prek_report** out);

/* Lower-level queries. */
PREK_API prek_status prek_tau(uint64_t n, uint64_t* out);
PREK_API prek_status prek_pre2_lower_bound(uint64_t n, uint64_t* out);

PREK_API prek_verdict prek_report_verdict(const prek_report* report);
PREK_API prek_status prek_report_render(prek_report* report, prek_format format, const char** text, size_t* length);
PREK_API void prek_report_destroy(prek_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PREK_PREK_H */
