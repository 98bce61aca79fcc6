/*
 * C interface to libbng, the Brill-Noether geography engine.
 *
 * Every entry point returns a bng_status. On failure a thread-local message
 * describing the error is available from bng_last_error(). Objects handed out
 * through pointer-to-pointer arguments are owned by the caller and released
 * with the matching *_free function.
 */
#ifndef BNG_BNG_H
#define BNG_BNG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BNG_BUILDING_LIBRARY)
#    define BNG_API __declspec(dllexport)
#  else
#    define BNG_API __declspec(dllimport)
#  endif
#else
#  define BNG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bng_status {
  BNG_OK = 0,
  BNG_ERR_INVALID_ARGUMENT = 1,
  BNG_ERR_SLOPE_OUT_OF_RANGE = 2,
  BNG_ERR_INVALID_QUOTIENT_RANK = 3,
  BNG_ERR_THRESHOLD_VIOLATED = 4,
  BNG_ERR_OUT_OF_STRIP = 5,
  BNG_ERR_RANK_ONE = 6,
  BNG_ERR_EMPTY_LOCUS = 7,
  BNG_ERR_INVALID_K = 8,
  BNG_ERR_INVALID_TUPLE = 9,
  BNG_ERR_PARSE = 10,
  BNG_ERR_IO = 11,
  BNG_ERR_OVERFLOW = 12,
  BNG_ERR_INTERNAL = 99
} bng_status;

typedef enum bng_format {
  BNG_FORMAT_HUMAN = 0,
  BNG_FORMAT_JSON = 1, /* JSON, or JSON lines for row-oriented output */
  BNG_FORMAT_CSV = 2
} bng_format;

typedef enum bng_campaign {
  BNG_CAMPAIGN_PROP61 = 0,
  BNG_CAMPAIGN_IDENTITIES = 1,
  BNG_CAMPAIGN_THMB = 2
} bng_campaign;

/* Name of a status code, e.g. "BNG_ERR_OUT_OF_STRIP". Never NULL. */
BNG_API const char* bng_status_name(bng_status status);

/* Message of the last failed call on this thread; "" when none. */
BNG_API const char* bng_last_error(void);

BNG_API const char* bng_version(void);

/* ---- owned text ------------------------------------------------------- */

typedef struct bng_text bng_text;

BNG_API const char* bng_text_data(const bng_text* text);
BNG_API size_t bng_text_size(const bng_text* text);
BNG_API void bng_text_free(bng_text* text);

/* ---- closed-form quantities ------------------------------------------- */

/* Brill-Noether number; BNG_ERR_OVERFLOW if it does not fit in 64 bits. */
BNG_API bng_status bng_brill_noether_number(int64_t g, int64_t n, int64_t d, int64_t k,
                                            int64_t* out);
BNG_API bng_status bng_moduli_dim(int64_t n, int64_t g, int64_t* out);
BNG_API bng_status bng_h1_dual(int64_t g, int64_t n, int64_t d, int64_t k, int64_t* out);
BNG_API bng_status bng_grass_dim(int64_t g, int64_t n, int64_t d, int64_t k, int64_t* out);
/* n + d/2 as numerator/denominator in lowest terms. */
BNG_API bng_status bng_clifford_bound(int64_t g, int64_t n, int64_t d, int64_t* num,
                                      int64_t* den);

/* ---- formatted queries ------------------------------------------------ */

BNG_API bng_status bng_query_rho(int64_t g, int64_t n, int64_t d, int64_t k, bng_format format,
                                 bng_text** out);

/* Classification of the stable locus (semistable = 0) or of the semistable
 * locus of S-equivalence classes (semistable = 1). */
BNG_API bng_status bng_query_classify(int64_t g, int64_t n, int64_t d, int64_t k,
                                      int semistable, bng_format format, bng_text** out);

/* Status of a single locus: 1 non-empty, 0 empty. */
BNG_API bng_status bng_is_nonempty(int64_t g, int64_t n, int64_t d, int64_t k, int semistable,
                                   int* out);

/* Rows (d, k) for 0 <= d <= n, 1 <= k <= n as CSV or JSON lines. */
BNG_API bng_status bng_query_scan(int64_t g, int64_t n, bng_format format, bng_text** out);

/* Non-emptiness criterion verdict (holds may be NULL), or with list != 0
 * the admissible destabilizing tuples as JSON lines. */
BNG_API bng_status bng_query_extensions(int64_t g, int64_t n, int64_t d, int64_t k, int list,
                                        bng_format format, bng_text** out, int* holds);

/* ---- verification campaigns ------------------------------------------- */

typedef struct bng_sweep_bounds {
  int64_t g_min;
  int64_t g_max;
  int64_t n_max;
  int64_t denominator;  /* (m, d') step 1/denominator; 1 = integer grid */
  int64_t m_cap_factor; /* m <= m_cap_factor * n */
  int64_t jobs;
  int progress;         /* nonzero: progress lines on standard error */
} bng_sweep_bounds;

/* g in [2, 4], n <= 12, integer grid, m cap 4n, one job, no progress. */
BNG_API bng_sweep_bounds bng_sweep_bounds_default(void);

typedef struct bng_report bng_report;

BNG_API bng_status bng_verify(bng_campaign campaign, const bng_sweep_bounds* bounds,
                              bng_report** out);
BNG_API int bng_report_verified(const bng_report* report);
BNG_API uint64_t bng_report_tuples_checked(const bng_report* report);
BNG_API uint64_t bng_report_counterexample_count(const bng_report* report);
BNG_API int64_t bng_report_elapsed_ms(const bng_report* report);
/* JSON (with or without the "meta" timing object) or a human summary. */
BNG_API bng_status bng_report_render(const bng_report* report, bng_format format,
                                     int include_meta, bng_text** out);
BNG_API void bng_report_free(bng_report* report);

/* ---- map -------------------------------------------------------------- */

typedef struct bng_map_options {
  int strip_only;
  int64_t overlay_n;             /* 0: no overlay */
  const char* teixidor_json;     /* JSON array of parallelograms, or NULL */
  int64_t hyperbola_step_den;    /* lambda step 1/den; 0 selects 100 */
} bng_map_options;

BNG_API bng_map_options bng_map_options_default(void);

BNG_API bng_status bng_render_map_svg(int64_t g, const bng_map_options* options,
                                      bng_text** out);

/* Teixidor parallelogram check: each output may be NULL. */
BNG_API bng_status bng_validate_teixidor(int64_t g, int64_t lambda0, int64_t mu0,
                                         int64_t vertical_extent, int64_t diagonal_extent,
                                         int* valid, int* all_above,
                                         int* lower_right_on_curve);

#ifdef __cplusplus
}
#endif

#endif /* BNG_BNG_H */
