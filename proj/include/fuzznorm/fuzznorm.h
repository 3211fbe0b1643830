/*
 * fuzznorm: numerical laboratory for fuzzy strong phi-b-normed linear
 * spaces on R^n and the operator theory over them.
 *
 * C interface over the shared library. All objects are opaque handles with
 * explicit destroy functions; every fallible call returns an fzn_status and
 * a thread-local diagnostic is available via fzn_last_error(). Structured
 * results (axiom reports, certificates) come back as JSON strings to be
 * released with fzn_string_free().
 */

#ifndef FUZZNORM_H
#define FUZZNORM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FZN_API __declspec(dllexport)
#else
#define FZN_API __attribute__((visibility("default")))
#endif

typedef enum fzn_status {
    FZN_OK = 0,
    FZN_ERROR_INVALID_ARGUMENT = 1,
    FZN_ERROR_DOMAIN = 2,            /* input outside the mathematical domain */
    FZN_ERROR_DIMENSION_MISMATCH = 3,
    FZN_ERROR_PRECONDITION = 4,      /* theorem hypotheses not met */
    FZN_ERROR_PARSE = 5,             /* malformed config/JSON */
    FZN_ERROR_NOT_FOUND = 6,
    FZN_ERROR_NO_CONVERGENCE = 7,
    FZN_ERROR_INTERNAL = 8
} fzn_status;

typedef struct fzn_tnorm fzn_tnorm;
typedef struct fzn_phi fzn_phi;
typedef struct fzn_space fzn_space;
typedef struct fzn_operator fzn_operator;

FZN_API const char* fzn_version(void);
/* Message for the most recent error on this thread; empty string if none. */
FZN_API const char* fzn_last_error(void);
FZN_API void fzn_string_free(char* s);

/* --- t-norms ----------------------------------------------------------- */

/* kind: "standard-intersection" | "algebraic-product" | "bounded-difference"
 * | "drastic" */
FZN_API fzn_status fzn_tnorm_create(const char* kind, fzn_tnorm** out);
/* continuity: "continuous" | "lower-semicontinuous" | "none" */
FZN_API fzn_status fzn_tnorm_create_custom(const char* name,
                                           double (*fn)(double a, double b, void* user),
                                           void* user, const char* continuity,
                                           fzn_tnorm** out);
FZN_API void fzn_tnorm_destroy(fzn_tnorm* t);
FZN_API fzn_status fzn_tnorm_eval(const fzn_tnorm* t, double a, double b, double* out);
FZN_API fzn_status fzn_tnorm_power(const fzn_tnorm* t, double a, int n, double* out);
FZN_API fzn_status fzn_tnorm_axiom_check(const fzn_tnorm* t, int sample_count, uint64_t seed,
                                         double tol, char** report_json);

/* --- phi functions ------------------------------------------------------ */

/* kind: "abs" | "abs-power" (param = p > 0) | "rational-example"
 * (param = n >= 1) */
FZN_API fzn_status fzn_phi_create(const char* kind, double param, fzn_phi** out);
FZN_API fzn_status fzn_phi_create_custom(const char* name,
                                         double (*fn)(double c, void* user), void* user,
                                         fzn_phi** out);
FZN_API void fzn_phi_destroy(fzn_phi* f);
FZN_API fzn_status fzn_phi_eval(const fzn_phi* f, double c, double* out);
FZN_API fzn_status fzn_phi_inverse(const fzn_phi* f, double y, double tol, double* out);
FZN_API fzn_status fzn_phi_axiom_check(const fzn_phi* f, int grid_size, double tol,
                                       char** report_json);

/* --- fuzzy spaces ------------------------------------------------------- */

/* JSON spec, documented keys:
 *   {"dimension": 2,
 *    "profile": {"kind": "step", "h": 0.5}
 *             | {"kind": "reciprocal"}
 *             | {"kind": "piecewise-linear", "knots": [[u, v], ...]},
 *    "exponent": 1.0,
 *    "tnorm": "standard-intersection",
 *    "K": 1.0,                 (optional, default 2^(p-1))
 *    "weights": [w1, ...]}     (optional weighted Euclidean base)
 */
FZN_API fzn_status fzn_space_create(const char* json_spec, fzn_space** out);
FZN_API void fzn_space_destroy(fzn_space* s);
FZN_API fzn_status fzn_space_dimension(const fzn_space* s, int* out);
FZN_API fzn_status fzn_space_satisfies_nvi(const fzn_space* s, int* out);
/* N(x, t) */
FZN_API fzn_status fzn_space_norm_eval(const fzn_space* s, const double* x, int dim, double t,
                                       double* out);
/* inf{t > 0 : N(x,t) >= alpha} (strict ">" when strict != 0) by bisection */
FZN_API fzn_status fzn_space_level_infimum(const fzn_space* s, const double* x, int dim,
                                           double alpha, int strict, double tol, double* out);
FZN_API fzn_status fzn_space_axiom_check(const fzn_space* s, int sample_count, uint64_t seed,
                                         double tol, char** report_json);

/* --- linear operators ---------------------------------------------------- */

/* row_major has rows*cols entries; rows must match the codomain dimension
 * and cols the domain dimension. The spaces are copied into the handle. */
FZN_API fzn_status fzn_operator_create(const fzn_space* domain, const fzn_space* codomain,
                                       const double* row_major, int rows, int cols,
                                       fzn_operator** out);
FZN_API void fzn_operator_destroy(fzn_operator* t);
FZN_API fzn_status fzn_operator_apply(const fzn_operator* t, const double* x, int x_dim,
                                      double* y, int y_dim);
/* B(x, alpha); +inf signals an unboundedness witness */
FZN_API fzn_status fzn_operator_boundedness_ratio(const fzn_operator* t, const double* x,
                                                  int dim, double alpha, double* out);
/* per-alpha boundedness certificate as JSON */
FZN_API fzn_status fzn_operator_certificate(const fzn_operator* t, const double* alpha_grid,
                                            int grid_len, int sphere_samples, uint64_t seed,
                                            char** report_json);
/* worst-case level-infimum ratio g(alpha); needs NVI domain and a
 * lower-semicontinuous codomain t-norm (FZN_ERROR_PRECONDITION otherwise) */
FZN_API fzn_status fzn_operator_g_alpha(const fzn_operator* t, double alpha,
                                        int sphere_samples, uint64_t seed, double* out);
/* operator fuzzy norm N(T, s) */
FZN_API fzn_status fzn_operator_fuzzy_norm(const fzn_operator* t, double s, double alpha_tol,
                                           int sphere_samples, uint64_t seed, double* out);

/* --- runner -------------------------------------------------------------- */

/* stream: 0 = report record (JSON line), 1 = human summary line,
 * 2 = plot row ("<series> <x> <y>") */
typedef void (*fzn_emit_cb)(int stream, const char* line, void* user);

/* Subcommands: tnorm-check, phi-check, space-check, d-alpha, seq-converge,
 * op-bound, op-continuity, op-norm, op-complete, counterexample,
 * verify-all. config_json selects the lab setup (NULL = built-in default
 * lab); overrides_json may carry {"seed", "alpha_grid", "tol", "samples",
 * "base_dir"}, where base_dir anchors relative matrix_file references.
 * failures receives the number of failed checks (precondition-unmet is not
 * a failure). */
FZN_API fzn_status fzn_run(const char* subcommand, const char* config_json,
                           const char* overrides_json, fzn_emit_cb emit, void* user,
                           int* failures);

/* The built-in default configuration as JSON (fzn_string_free to release). */
FZN_API fzn_status fzn_default_config(char** config_json);

#ifdef __cplusplus
}
#endif

#endif /* FUZZNORM_H */
