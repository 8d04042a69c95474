#ifndef RBELLKIT_H
#define RBELLKIT_H

/* C interface to the exact triangle / polynomial-family library.
 *
 * Conventions:
 *  - Rational scalars cross the boundary as base-10 strings "num" or
 *    "num/den"; outputs are canonical (gcd 1, positive denominator, "/den"
 *    omitted when the value is an integer).
 *  - Every function returning rbk_status leaves its outputs untouched on
 *    failure and sets a thread-local message readable via rbk_last_error().
 *  - Strings returned through char** are heap-allocated; release them with
 *    rbk_free_string(). Handles are released with their matching _free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbk_status {
  RBK_OK = 0,
  RBK_ERR_INVALID = 1,  /* malformed input, bad index, structural misuse */
  RBK_ERR_DOMAIN = 2,   /* value outside the operation's domain */
  RBK_ERR_NOMEM = 3,
  RBK_ERR_INTERNAL = 4
} rbk_status;

typedef struct rbk_family rbk_family;  /* sequence family a_1, a_2, ... */
typedef struct rbk_table rbk_table;    /* triangle of exact values */
typedef struct rbk_suite rbk_suite;    /* identity verification results */

/* Library version, static storage. */
const char* rbk_version(void);

/* Message for the most recent failure in this thread; static until the next
 * failing call on the same thread. Never NULL. */
const char* rbk_last_error(void);

void rbk_free_string(char* s);

/* Families: grammar kind[:param=value], e.g. "ones", "exponential:m=2",
 * "log-inverse:m=1", "power-binomial:beta=1/2", "signed-factorial",
 * "explicit:[1,-2,3/4]", and a "shifted:" prefix. */
rbk_status rbk_family_parse(const char* text, rbk_family** out);
rbk_status rbk_family_describe(const rbk_family* family, char** out);
void rbk_family_free(rbk_family* family);

/* Triangle entry for row n, column k, weight r (value as rational text). */
rbk_status rbk_partial_r_bell(const rbk_family* a, const rbk_family* b, int n, int k, int r,
                              char** out_value);

/* Whole triangle 0 <= k <= n <= max_n. */
rbk_status rbk_table_compute(const rbk_family* a, const rbk_family* b, int r, int max_n,
                             rbk_table** out);
rbk_status rbk_table_value(const rbk_table* table, int n, int k, char** out_value);
rbk_status rbk_table_to_csv(const rbk_table* table, char** out_text);
rbk_status rbk_table_to_json(const rbk_table* table, char** out_text);
void rbk_table_free(rbk_table* table);

/* Whitney-style triangle values over the exponential family (second kind)
 * and its inverse pair (first kind). m is rational text, m != 0. */
rbk_status rbk_whitney_second(const char* m, int r, int n, int k, char** out_value);
rbk_status rbk_whitney_first(const char* m, int r, int n, int k, char** out_value);

/* Polynomial families; all parameters are rational text. */
rbk_status rbk_bernoulli_first(const char* alpha, const char* x, int n, char** out_value);
rbk_status rbk_bernoulli_second(const char* alpha, const char* x, int n, char** out_value);
rbk_status rbk_bernoulli_first_closed(int n, int p, const char* m, int r, char** out_value);
rbk_status rbk_bernoulli_second_closed(int n, int p, const char* m, int r, char** out_value);
rbk_status rbk_bernoulli_first_mixed(int n, int p, const char* m, int r, int s, char** out_value);
rbk_status rbk_bernoulli_second_mixed(int n, int p, const char* m, int r, int s, char** out_value);
rbk_status rbk_laguerre(const char* alpha, const char* beta, const char* x, int n,
                        char** out_value);

/* n! [t^n] (t/A)^alpha (A')^x with A the a-role series of `a` (a_1 = 1). */
rbk_status rbk_t_poly(const rbk_family* a, const char* alpha, const char* x, int n,
                      char** out_value);

/* n! [t^n] (t/A)^alpha (A')^x B^y with A from `a` (a_1 = 1) and B the b-role
 * series of `b` (b_1 = 1). */
rbk_status rbk_p_bivariate(const rbk_family* a, const rbk_family* b, const char* alpha,
                           const char* x, const char* y, int n, char** out_value);

/* Identity verification. config_text is key=value lines ('#' comments);
 * NULL or empty runs the defaults. Recognized keys: seed, random_pairs,
 * thm1_max_n, thm2_max_n, prop_max_n, prop_max_p, laguerre_max_n,
 * bern_max_n, closed_max_np, suites (comma-separated group names). */
rbk_status rbk_suite_run(const char* config_text, rbk_suite** out);
int rbk_suite_passed(const rbk_suite* suite); /* 1 pass, 0 fail */
rbk_status rbk_suite_reports_json(const rbk_suite* suite, char** out_text);
void rbk_suite_free(rbk_suite* suite);

#ifdef __cplusplus
}
#endif

#endif /* RBELLKIT_H */
