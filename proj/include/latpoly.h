/* latpoly: exact lattice-point counts in dilated cross-polytopes and corner
 * simplices with algebraic axis lengths, their explicit main-term polynomials,
 * simplex Fourier transforms, Cesaro/Poisson machinery, Diophantine product
 * sums, and Ehrhart/Dedekind identities.
 *
 * C interface contract:
 *   - Every fallible call returns latpoly_status; LATPOLY_OK is 0.
 *   - On failure, latpoly_last_error() returns a message for the most recent
 *     failing call on the current thread (never NULL).
 *   - Strings returned through char** are heap-allocated; release them with
 *     latpoly_string_free. Handles are released with their matching _free.
 *   - Exact values (counts, rationals) are emitted as decimal strings, never
 *     truncated to machine integers.
 */
#ifndef LATPOLY_H
#define LATPOLY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latpoly_status {
    LATPOLY_OK = 0,
    LATPOLY_E_PARSE,
    LATPOLY_E_INVALID_ARGUMENT,
    LATPOLY_E_PRECISION_EXHAUSTED,
    LATPOLY_E_POLE_COLLISION,
    LATPOLY_E_NOT_CONVERGED,
    LATPOLY_E_DENOMINATOR_ZERO,
    LATPOLY_E_RATIONAL_ALPHA,
    LATPOLY_E_NOT_COPRIME,
    LATPOLY_E_NOT_PAIRWISE_COPRIME,
    LATPOLY_E_DEGENERATE_SIMPLEX,
    LATPOLY_E_INSUFFICIENT_DATA,
    LATPOLY_E_INTERPOLATION_INCONSISTENT,
    LATPOLY_E_INTERNAL,
    LATPOLY_E_NOMEM
} latpoly_status;

const char* latpoly_version(void);
const char* latpoly_status_name(latpoly_status s);

/* Message for the most recent failing call on this thread; empty string if no
 * call has failed yet. The pointer stays valid until the next failing call. */
const char* latpoly_last_error(void);

void latpoly_string_free(char* s);

/* ---- exact scalars ----------------------------------------------------- */
/* Textual syntax: "p", "p/q", decimals like "-3.25", "sqrt(D)", signed sums
 * "3/2*sqrt(5)-1/2", and "root(c_k,...,c_0; lo, hi)" for the unique root of
 * the integer polynomial inside (lo, hi); a root atom stands alone. */
typedef struct latpoly_scalar latpoly_scalar;

latpoly_status latpoly_scalar_parse(const char* text, latpoly_scalar** out);
latpoly_status latpoly_scalar_format(const latpoly_scalar* s, char** out);
latpoly_status latpoly_scalar_approx(const latpoly_scalar* s, double* out);
void latpoly_scalar_free(latpoly_scalar* s);

/* ---- polytopes ---------------------------------------------------------- */
/* Spec syntax: "cross d=3 a=[sqrt(2), 1, 3/2]" or "simplex d=2 a=[1, 1]". */
typedef struct latpoly_polytope latpoly_polytope;

latpoly_status latpoly_polytope_parse(const char* spec, latpoly_polytope** out);
latpoly_status latpoly_polytope_format(const latpoly_polytope* p, char** out);
latpoly_status latpoly_polytope_dim(const latpoly_polytope* p, int* out);
void latpoly_polytope_free(latpoly_polytope* p);

/* ---- counting ----------------------------------------------------------- */
/* JSON: {"count": "...", "boundary_hits": "...", "certified": true|false}.
 * brute_force != 0 switches to the naive box enumeration (small t only). */
latpoly_status latpoly_count_json(const latpoly_polytope* p, const latpoly_scalar* t,
                                  int brute_force, char** out);

/* ---- main-term polynomials ---------------------------------------------- */
/* Coefficients of p(t) for a cross-polytope or q(t) for the simplex average.
 * JSON: {"kind": ..., "dim": d, "coefficients": [{"k": k, "symbolic":
 * [{"exponents": [...], "coeff": "p/q"}, ...], "decimal": x, "enclosure_width":
 * w}, ...]} with decimals evaluated at precision_bits (0 = default). */
latpoly_status latpoly_mainterm_json(const latpoly_polytope* p, long precision_bits,
                                     char** out);

/* ---- simplex Fourier transforms ------------------------------------------ */
/* vertices: "[[x11, x12], [x21, x22], [x31, x32]]" (d+1 rows of d scalars);
 * y: "[y1, ..., yd]"; method: "standard" | "contour" | "residues" | "oracle".
 * "standard" evaluates the unit standard simplex and ignores vertices.
 * JSON: {"re": ..., "im": ..., "method": ..., "error_bound": ...}. */
latpoly_status latpoly_fourier_json(const char* vertices, const char* y, const char* t,
                                    const char* method, double tolerance, long precision_bits,
                                    char** out);

/* ---- Cesaro means --------------------------------------------------------- */
/* axes: "[a1, ..., ad]"; n_list: comma-separated Fejer orders, e.g. "16,64".
 * CSV columns: N, cesaro, count, error_series, gap. */
latpoly_status latpoly_cesaro_csv(const char* axes, const char* t, const char* n_list,
                                  char** out);

/* ---- Diophantine product sums --------------------------------------------- */
/* alphas: "[sqrt(2)]" or "[sqrt(2), sqrt(3)]"; checkpoints: comma-separated
 * ascending M values, or "" for a doubling ladder up to m_max.
 * csv columns: M, S, L; fit_json: {"slope", "ci_low", "ci_high", "n"} or null
 * when fewer than three checkpoints land in the fitted upper half. */
latpoly_status latpoly_dioph_csv(const char* alphas, long m_max, const char* checkpoints,
                                 char** csv_out, char** fit_json_out);

/* ---- Ehrhart ---------------------------------------------------------------- */
/* axes: "[a1, ..., ad]", positive integers. JSON: {"coefficients": ["...",
 * ...] ascending, "formula_td_minus_2": "p/q" or null for d < 2 or axes that
 * are not pairwise coprime, "match": true|false|null}. */
latpoly_status latpoly_ehrhart_json(const char* axes, char** out);

/* ---- discrepancy sweeps ---------------------------------------------------- */
/* config: key-value text (see README). csv columns: t, count, main_term,
 * delta, certified; fit_json as for latpoly_dioph_csv, null if the grid is
 * too small to fit. */
latpoly_status latpoly_scan_csv(const char* config, char** csv_out, char** fit_json_out);

/* ---- acceptance campaigns --------------------------------------------------- */
/* Newline-separated campaign names. */
latpoly_status latpoly_campaign_list(char** out);

/* Runs one campaign, writes its artifact files into out_dir (created if
 * missing), and returns the plain-text summary. *passed is 1 only if every
 * criterion in the campaign passed. A failed criterion is not an error
 * status; the call itself succeeded. */
latpoly_status latpoly_report_campaign(const char* name, const char* out_dir, int* passed,
                                       char** summary_out);

#ifdef __cplusplus
}
#endif

#endif /* LATPOLY_H */
