/*
 * degenstir — exact computation of deformed Stirling and Bernoulli numbers
 * as polynomials in the deformation parameter over the rationals, plus a
 * machine-checked catalog of the identities relating them.
 *
 * C interface of the shared library. All objects are opaque handles; all
 * returned strings are heap-allocated and must be released with
 * dgs_string_free(). Functions return DGS_OK on success; on any other code
 * dgs_last_error() describes the failure (thread-local, valid until the next
 * failing call on the same thread).
 *
 * Exact values cross this boundary as text: rationals as "p/q" (or "p"),
 * polynomials in the deformation parameter as JSON arrays of coefficient
 * strings in ascending degree, polynomials in x as arrays of such arrays.
 */

#ifndef DEGENSTIR_H
#define DEGENSTIR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dgs_status {
    DGS_OK = 0,
    DGS_ERROR_INVALID_ARGUMENT = 1, /* bad parameter, unknown name/id */
    DGS_ERROR_PARSE = 2,            /* malformed rational or format string */
    DGS_ERROR_DOMAIN = 3,           /* pole, division by zero, precondition */
    DGS_ERROR_INTERNAL = 4
} dgs_status;

const char *dgs_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char *dgs_last_error(void);

void dgs_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Triangle of deformed second-kind Stirling numbers                   */
/* ------------------------------------------------------------------ */

typedef struct dgs_triangle dgs_triangle;

/* algorithm: "recurrence", "euler-sum" or "egf". */
dgs_status dgs_triangle_build(const char *algorithm, int n_max, dgs_triangle **out);
void dgs_triangle_free(dgs_triangle *t);

int dgs_triangle_n_max(const dgs_triangle *t);

/* Entry {n k} as a JSON coefficient array (zero entries give "[]"). */
dgs_status dgs_triangle_entry(const dgs_triangle *t, int n, int k, char **json_out);

/* Whole table as "json", "csv" or "markdown"; lambda (a rational string)
 * may be NULL to keep the parameter symbolic. */
dgs_status dgs_triangle_render(const dgs_triangle *t, const char *format,
                               const char *lambda, char **out);

/* ------------------------------------------------------------------ */
/* Deformed Bernoulli numbers of (rational) order alpha                */
/* ------------------------------------------------------------------ */

typedef struct dgs_bernoulli dgs_bernoulli;

/* route: "series" or "closed-form". */
dgs_status dgs_bernoulli_build(const char *alpha, const char *route, int n_max,
                               dgs_bernoulli **out);
void dgs_bernoulli_free(dgs_bernoulli *b);

dgs_status dgs_bernoulli_value(const dgs_bernoulli *b, int n, char **json_out);

dgs_status dgs_bernoulli_render(const dgs_bernoulli *b, const char *format,
                                const char *lambda, char **out);

/* ------------------------------------------------------------------ */
/* Point / polynomial evaluation                                       */
/* ------------------------------------------------------------------ */

/* family: "S", "Snr", "T" or "Bell". x and lambda are rational strings or
 * NULL to stay symbolic. Fully evaluated results print as a bare rational;
 * partially symbolic ones as JSON coefficient arrays. */
dgs_status dgs_eval_family(const char *family, int n, int r, const char *x,
                           const char *lambda, char **out);

dgs_status dgs_eval_bernoulli(const char *alpha, int n, const char *lambda, char **out);

/* ------------------------------------------------------------------ */
/* Identity verification                                               */
/* ------------------------------------------------------------------ */

typedef struct dgs_verify_options {
    int n_max;         /* sweep limit, capped per case */
    int r_max;
    int order;         /* series truncation order */
    int sample_points; /* random rational sample count for 2-variable checks */
    unsigned long long seed;
    const char *alpha; /* optional rational string restricting order sweeps */
    const char *only;  /* optional case id; NULL runs the whole catalog */
    int timing;        /* nonzero: include per-case milliseconds */
} dgs_verify_options;

/* Fills in the library defaults (n_max 10, r_max 10, order 32,
 * sample_points 20, seed 42, no filters, no timing). */
void dgs_verify_options_init(dgs_verify_options *opts);

/* format: "json" or "markdown". all_pass receives 1 when no case failed. */
dgs_status dgs_verify_run(const dgs_verify_options *opts, const char *format,
                          int *all_pass, char **report_out);

/* Newline-separated list of every case id in the catalog. */
dgs_status dgs_verify_ids(char **out);

/* ------------------------------------------------------------------ */
/* Numeric check of the trigonometric sums                             */
/* ------------------------------------------------------------------ */

/* JSON record {r, x, lambda, n_terms, cos_partial, cos_closed, sin_partial,
 * sin_closed, abs_err}; the only floating-point surface of the library. */
dgs_status dgs_trig_check(int r, double x, const char *lambda, int n_terms,
                          char **json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DEGENSTIR_H */
