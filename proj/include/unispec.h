#ifndef UNISPEC_H
#define UNISPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(UNISPEC_BUILDING_LIBRARY)
#define UNISPEC_API __attribute__((visibility("default")))
#else
#define UNISPEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unispec_status {
  UNISPEC_OK = 0,
  UNISPEC_INVALID = 2,    /* bad parameter or malformed text */
  UNISPEC_BOUND = 3,      /* desk-scale bound exceeded, see UNISPEC_MAX_CELLS */
  UNISPEC_INTERNAL = 4,   /* invariant violated or unexpected failure */
  UNISPEC_DEGENERATE = 5  /* input admits no answer, e.g. a vanishing denominator */
} unispec_status;

typedef enum unispec_format { UNISPEC_CSV = 0, UNISPEC_JSON = 1 } unispec_format;

typedef struct unispec_table unispec_table;
typedef struct unispec_report unispec_report;
typedef struct unispec_sampler unispec_sampler;

/* Message of the last failing call on this thread; "" after success. */
UNISPEC_API const char* unispec_last_error(void);
UNISPEC_API const char* unispec_version(void);
UNISPEC_API void unispec_string_free(char* s);

UNISPEC_API size_t unispec_table_rows(const unispec_table* t);
UNISPEC_API size_t unispec_table_cols(const unispec_table* t);
UNISPEC_API const char* unispec_table_header(const unispec_table* t, size_t col);
UNISPEC_API const char* unispec_table_cell(const unispec_table* t, size_t row, size_t col);
UNISPEC_API size_t unispec_table_footer_lines(const unispec_table* t);
UNISPEC_API const char* unispec_table_footer(const unispec_table* t, size_t line);
/* Caller frees with unispec_string_free. */
UNISPEC_API char* unispec_table_render(const unispec_table* t, unispec_format fmt);
UNISPEC_API void unispec_table_free(unispec_table* t);

/* model: "gl" or "triangular". */
UNISPEC_API unispec_status unispec_dist(const char* model, int n, int p, unispec_table** out);
/* spec: "borodin:n=<n>,p=<p>" or "coins:p=<p>,limit=<k>". */
UNISPEC_API unispec_status unispec_sample(const char* spec, uint64_t trials, uint64_t seed, unispec_table** out);

typedef struct unispec_stats_params {
  const char* model;  /* NULL: not given */
  int n;
  int p;
  int r;              /* 0: every r */
  int s;
  const char* theta;  /* "a/b" or NULL */
  const char* lambda; /* "[...]" or NULL */
} unispec_stats_params;

/* kind: mean-xr, mean-arc, second-moment, orbits, xtheta. */
UNISPEC_API unispec_status unispec_stats(const char* kind, const unispec_stats_params* params, unispec_table** out);

typedef struct unispec_verify_options {
  int n_max;             /* 0: defaults */
  int n;                 /* 0: all sizes */
  const int* primes;
  size_t prime_count;    /* 0: defaults */
  uint64_t trials;       /* 0: defaults */
  uint64_t seed;
} unispec_verify_options;

#define UNISPEC_DEFAULT_SEED UINT64_C(20240917)

/* suite: identities, oracle, samplers, all. A failing check is not an error
   status; inspect unispec_report_passed. */
UNISPEC_API unispec_status unispec_verify(const char* suite, const unispec_verify_options* options,
                                          unispec_report** out);
UNISPEC_API int unispec_report_passed(const unispec_report* r);
UNISPEC_API size_t unispec_report_checks(const unispec_report* r);
UNISPEC_API size_t unispec_report_failures(const unispec_report* r);
/* Schema-1 JSON document; caller frees with unispec_string_free. */
UNISPEC_API char* unispec_report_json(const unispec_report* r);
UNISPEC_API void unispec_report_free(unispec_report* r);

UNISPEC_API unispec_status unispec_sampler_create(const char* spec, uint64_t seed, unispec_sampler** out);
/* Draws one partition; *partition is "[...]" and freed with unispec_string_free. */
UNISPEC_API unispec_status unispec_sampler_draw(unispec_sampler* s, char** partition);
UNISPEC_API void unispec_sampler_free(unispec_sampler* s);

#ifdef __cplusplus
}
#endif

#endif /* UNISPEC_H */
