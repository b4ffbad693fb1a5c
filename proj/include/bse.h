/*
 * C API for the bse library: exact computation of Stirling numbers of the
 * first kind, Bernoulli and Euler numbers, Bernoulli polynomials, and exact
 * verification of the identities relating them.
 *
 * All values cross the boundary as decimal strings; rationals as "p/q" with
 * the sign on the numerator ("p" when the denominator is 1). Rows and
 * coefficient lists are comma-separated. Reports are JSON objects. Output
 * strings are heap-allocated and must be released with bse_free().
 *
 * A bse_ctx owns the memo caches and may be shared across threads.
 */
#ifndef BSE_H
#define BSE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bse_ctx bse_ctx;

typedef enum {
    BSE_OK = 0,
    BSE_ERR_INVALID_ARGUMENT = 1,
    BSE_ERR_INTERNAL = 2
} bse_status;

bse_ctx *bse_ctx_new(void);
void bse_ctx_free(bse_ctx *ctx);

/* Message describing the most recent failing call on this context. */
const char *bse_last_error(const bse_ctx *ctx);

void bse_free(char *s);

/* Sequence values. */
bse_status bse_stirling(bse_ctx *ctx, unsigned long n, unsigned long k, char **out);
bse_status bse_stirling_row(bse_ctx *ctx, unsigned long n, char **out_csv);
bse_status bse_bernoulli(bse_ctx *ctx, unsigned long n, char **out);
bse_status bse_euler(bse_ctx *ctx, unsigned long n, char **out);
bse_status bse_bernoulli_poly(bse_ctx *ctx, unsigned long n, char **out_csv);
bse_status bse_bernoulli_poly_eval(bse_ctx *ctx, unsigned long n, const char *x, char **out);
bse_status bse_falling_factorial(bse_ctx *ctx, const char *x, unsigned long n, char **out);
bse_status bse_rising_factorial(bse_ctx *ctx, const char *x, unsigned long n, char **out);
bse_status bse_double_factorial_odd(bse_ctx *ctx, unsigned long n, char **out);
bse_status bse_binomial(bse_ctx *ctx, unsigned long n, unsigned long k, char **out);
bse_status bse_binomial_rat(bse_ctx *ctx, const char *x, unsigned long n, char **out);

/*
 * Identity verification sweep. `identity` is one of "first", "second",
 * "third", "recur", "stirdef", "telescoped", "half", "quarter", or "all".
 * On BSE_OK, *all_pass is 1 iff every row passed and *report_json holds the
 * report (timings excluded; byte-stable for fixed inputs).
 */
bse_status bse_verify(bse_ctx *ctx, const char *identity, unsigned long n_min,
                      unsigned long n_max, int *all_pass, char **report_json);

/*
 * Oracle cross-checks (Bernoulli, Euler, Stirling rows to n = 200) plus the
 * von Staudt-Clausen denominator test to n = 100. A nonzero `inject_fault`
 * perturbs one oracle value so the run must fail (negative-path hook).
 */
bse_status bse_selftest(bse_ctx *ctx, int inject_fault, int *all_pass, char **report_json);

/* Wall-clock timings for computing and verifying up to max_n; repeats >= 1. */
bse_status bse_bench(bse_ctx *ctx, unsigned long max_n, unsigned int repeats,
                     char **report_json);

#ifdef __cplusplus
}
#endif

#endif /* BSE_H */
