/* divkit — exact f-divergences, Csiszár dependence indices and checkerboard
 * copulas on finite discrete distributions.
 *
 * C interface of the shared library. All objects are opaque handles created
 * from JSON text and released with the matching *_free function. Functions
 * return DIVKIT_OK on success; on failure the out parameters are untouched
 * and divkit_last_error() describes the problem (thread-local).
 *
 * Values in (-inf, +inf]: +infinity is a legal divergence and is returned
 * as the IEEE infinity; JSON reports spell it "inf".
 *
 * JSON schemas:
 *   distribution  {"atoms":[{"label":"a","p":0.5}, ...]}
 *   joint         {"x":["a",...],"y":["b",...],"pmf":[[...],...]}
 *   kernel        {"source":[...],"target":[...],"rows":[[...],...]}
 *
 * Generator names: kl, kl-star, tv, hellinger, pearson, neyman,
 * alpha:<float>, lecam, js.
 */

#ifndef DIVKIT_H
#define DIVKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define DIVKIT_API __declspec(dllexport)
#else
#  define DIVKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum divkit_status {
    DIVKIT_OK = 0,
    DIVKIT_ERROR_INVALID_ARGUMENT = 1, /* inconsistent values (bad masses, ...) */
    DIVKIT_ERROR_LABEL_MISMATCH = 2,   /* label sets do not line up */
    DIVKIT_ERROR_PARSE = 3,            /* malformed JSON or unknown name */
    DIVKIT_ERROR_CONSTRAINT = 4,       /* domain constraint violated */
    DIVKIT_ERROR_INTERNAL = 5
} divkit_status;

typedef struct divkit_dist divkit_dist;
typedef struct divkit_joint divkit_joint;
typedef struct divkit_kernel divkit_kernel;
typedef struct divkit_generator divkit_generator;
typedef struct divkit_copula divkit_copula;

DIVKIT_API const char* divkit_version(void);

/* Message for the most recent failure on this thread ("" if none). */
DIVKIT_API const char* divkit_last_error(void);

/* ---- construction / destruction ---- */

DIVKIT_API divkit_status divkit_dist_parse(const char* json, divkit_dist** out);
DIVKIT_API void divkit_dist_free(divkit_dist* d);

DIVKIT_API divkit_status divkit_joint_parse(const char* json, divkit_joint** out);
DIVKIT_API void divkit_joint_free(divkit_joint* j);

DIVKIT_API divkit_status divkit_kernel_parse(const char* json, divkit_kernel** out);
DIVKIT_API void divkit_kernel_free(divkit_kernel* k);

DIVKIT_API divkit_status divkit_generator_create(const char* name, divkit_generator** out);
DIVKIT_API void divkit_generator_free(divkit_generator* g);

/* Checkerboard copula of a joint distribution. */
DIVKIT_API divkit_status divkit_checkerboard(const divkit_joint* j, divkit_copula** out);
DIVKIT_API void divkit_copula_free(divkit_copula* c);

/* Strings returned through char** out parameters are heap allocated and
 * must be released with divkit_string_free. */
DIVKIT_API void divkit_string_free(char* s);

/* ---- generators ---- */

/* f(0+) and f*(0); +infinity when the limit diverges. */
DIVKIT_API divkit_status divkit_generator_limits(const divkit_generator* g, double* at_zero,
                                                 double* conj_at_zero);

/* (f + f*)(0), the supremum of D_f. */
DIVKIT_API divkit_status divkit_sup_bound(const divkit_generator* g, double* out);

/* ---- divergences ---- */

typedef struct divkit_div_report {
    double value;         /* D_f(P||Q), +inf allowed */
    double singular_mass; /* P(dP/dQ = +inf) */
    double ac_part;       /* integral over {q > 0} */
    double lower_part;    /* symmetric decomposition, {0 <= p < q} via f */
    double upper_part;    /* symmetric decomposition, {0 <= q < p} via f* */
} divkit_div_report;

DIVKIT_API divkit_status divkit_f_divergence(const divkit_dist* p, const divkit_dist* q,
                                             const divkit_generator* g,
                                             divkit_div_report* out);

DIVKIT_API divkit_status divkit_renyi(const divkit_dist* p, const divkit_dist* q,
                                      double alpha, double* out);

DIVKIT_API divkit_status divkit_entropy(const divkit_dist* p, double* out);

/* ---- Csiszár index ---- */

typedef struct divkit_csiszar_report {
    double value;              /* S_f = D_f(P_X (x) P_Y || P_(X,Y)) */
    double via_conditionals;   /* sum_x P_X(x) D_f(P_Y || P_{Y|X=x}) */
    double mutual_information; /* H(X) + H(Y) - H(X,Y) */
} divkit_csiszar_report;

DIVKIT_API divkit_status divkit_csiszar(const divkit_joint* j, const divkit_generator* g,
                                        divkit_csiszar_report* out);

/* ---- copulas ---- */

DIVKIT_API divkit_status divkit_copula_divergence(const divkit_copula* c,
                                                  const divkit_generator* g, double* out);

/* CSV rows i,j,u_lo,u_hi,v_lo,v_hi,mass,density (with header). */
DIVKIT_API divkit_status divkit_copula_grid_csv(const divkit_copula* c, char** out_csv);

/* n interpolating-copula samples as two-column CSV "u,v" (with header).
 * scheme: shared | independent | antithetic. */
DIVKIT_API divkit_status divkit_sample_csv(const divkit_joint* j, const char* scheme,
                                           uint64_t n, uint64_t seed, char** out_csv);

/* ---- FGM family ---- */

/* theta = (r - pq) / (pq(1-p)(1-q)); fails unless (p+q-1)_+ < r < min(p,q)
 * and theta lands in [-1, 1]. */
DIVKIT_API divkit_status divkit_fgm_fit(double p, double q, double r, double* theta_out);

/* Tensor Gauss-Legendre estimate of D_f(Pi || C_theta); *converged reports
 * whether the order and order/2 estimates agree within 1e-5. */
DIVKIT_API divkit_status divkit_fgm_divergence(double theta, const divkit_generator* g,
                                               int order, double* value, int* converged,
                                               double* successive_diff);

DIVKIT_API divkit_status divkit_fgm_pearson_closed_form(double theta, double* out);

DIVKIT_API divkit_status divkit_dilog(double x, double* out);

/* ---- property check suites ---- */

/* Runs a named randomized suite; *violations receives the number of
 * counterexamples found and *report_json the full JSON report. */
DIVKIT_API divkit_status divkit_check_suite(const char* suite, unsigned trials,
                                            uint64_t seed, char** report_json,
                                            int* violations);

/* Space-separated list of valid suite names. */
DIVKIT_API const char* divkit_check_suite_list(void);

/* The worked Bernoulli example joint (p = q = 1/2, r = 5/16) as JSON. */
DIVKIT_API const char* divkit_example_bernoulli_json(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DIVKIT_H */
