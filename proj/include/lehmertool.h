#ifndef LEHMERTOOL_H
#define LEHMERTOOL_H

/* C API for the lehmertool shared library.
 *
 * All report-producing calls return a heap-allocated JSON (or CSV) string
 * through an out parameter; release it with lt_string_free. On failure
 * they return a nonzero lt_status and leave a message retrievable with
 * lt_last_error (thread-local). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_INTERNAL = 1,
  LT_ERR_PARSE = 2,      /* unparseable input or invalid configuration */
  LT_ERR_HYPOTHESIS = 3, /* cyclotomic collision, bad reduction, torsion */
  LT_ERR_PRECISION = 4,  /* requested precision not certifiable */
  LT_ERR_BOUND = 5       /* a proved bound was violated (falsification) */
} lt_status;

typedef struct lt_poly lt_poly;
typedef struct lt_curve lt_curve;

const char* lt_version(void);
const char* lt_last_error(void);
void lt_string_free(char* s);

/* ---- polynomials ---- */

lt_status lt_poly_parse(const char* text, lt_poly** out);
void lt_poly_free(lt_poly* p);
lt_status lt_poly_render(const lt_poly* p, char** out);
int lt_poly_degree(const lt_poly* p);

/* Full congruence report for one polynomial: divisibility by the
 * degree-(n-1) all-ones polynomial mod m, the resultant divisibility
 * m^(n-1) | Res(f, Phi_{n-1}), the valuation sum Delta with its
 * (n-1)/n threshold, the Mahler measure, and every bound with slack. */
lt_status lt_check_report(const char* poly, const char* modulus, long n,
                          double tol, char** json_out);

/* Coefficient-space search. mode is "congruent-to-phi",
 * "divisible-by-phi", or "samuels(u)" with u a polynomial expression.
 * count < 0 selects exhaustive enumeration. Returns the CSV data section
 * and a JSON summary; returns LT_ERR_BOUND if any candidate violated an
 * applicable bound (both outputs are still populated for the dump). */
lt_status lt_search_run(const char* mode, long degree, const char* modulus,
                        long n, long coeff_bound, long count,
                        unsigned long long seed, double tol, double eps,
                        char** csv_out, char** json_out);

/* Fejer kernel verification for J = 1..J_max plus the monotone-kernel
 * grid check; LT_ERR_BOUND if any margin < -1e-9. */
lt_status lt_fejer_verify(long J_max, long grid, int depth, char** json_out);

/* Elliptic report: canonical height of P, local heights, Delta for the
 * point set {P} at (m, n), monotonicity up to j_max, the height bound at
 * the optimal J, and the point filter. Curve text is "a1,a2,a3,a4,a6",
 * point text is "x,y" with exact rational coordinates. */
lt_status lt_elliptic_report(const char* curve, const char* point,
                             const char* modulus, long n, long j_max,
                             double c_e, double eps, char** json_out);

/* Bound table for externally supplied (delta, D, m, n): one row per J in
 * 1..J_max plus the closed-form bounds. format is "csv" or "json". */
lt_status lt_bounds_table(double delta_val, long D, const char* modulus,
                          long n, double eps, long J_max, const char* format,
                          char** out);

#ifdef __cplusplus
}
#endif

#endif /* LEHMERTOOL_H */
