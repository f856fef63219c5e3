/*
 * statdisc — stationary discs attached to Levi nondegenerate quadric models.
 *
 * C interface to the statdisc shared library. All objects are opaque
 * handles; every function returns a status code and writes results through
 * out-parameters. Complex data crosses the boundary as interleaved
 * (re, im) double arrays. Thread safety: handles are immutable after
 * creation and may be shared across threads; statdisc_last_error() is
 * thread-local.
 */

#ifndef STATDISC_H
#define STATDISC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum statdisc_status {
    STATDISC_OK = 0,
    STATDISC_ERR_NON_HERMITIAN = 1,
    STATDISC_ERR_DIMENSION = 2,
    STATDISC_ERR_NO_DIRECTION = 3,
    STATDISC_ERR_SINGULAR_LEVI = 4,
    STATDISC_ERR_NOT_CONVERGED = 5,
    STATDISC_ERR_NORM_TOO_LARGE = 6,
    STATDISC_ERR_SPECTRAL_RADIUS = 7,
    STATDISC_ERR_FACTORIZATION = 8,
    STATDISC_ERR_SINGULAR_SYSTEM = 9,
    STATDISC_ERR_OUTSIDE_DISC = 10,
    STATDISC_ERR_NOT_ON_BOUNDARY = 11,
    STATDISC_ERR_INCONSISTENT = 12,
    STATDISC_ERR_INPUT = 13,
    STATDISC_ERR_TOLERANCE = 14,
    STATDISC_ERR_SOLVER = 15,
    STATDISC_ERR_ARGUMENT = 16,
    STATDISC_ERR_INTERNAL = 17
} statdisc_status;

typedef struct statdisc_quadric statdisc_quadric;
typedef struct statdisc_disc statdisc_disc;

/* Library version string, e.g. "0.1.0". Owned by the library. */
const char* statdisc_version(void);

/* Message of the last failure on this thread; empty string if none. */
const char* statdisc_last_error(void);

/* ---- quadric ---------------------------------------------------------- */

/* Parses {"n": .., "d": .., "matrices": [...]} with [re, im] complex pairs;
 * rejects NaN/Inf and non-Hermitian matrices. */
statdisc_status statdisc_quadric_parse(const char* json_text,
                                       statdisc_quadric** out);
statdisc_status statdisc_quadric_load(const char* path,
                                      statdisc_quadric** out);
void statdisc_quadric_free(statdisc_quadric* q);

int statdisc_quadric_cr_dim(const statdisc_quadric* q);  /* n */
int statdisc_quadric_codim(const statdisc_quadric* q);   /* d */

/* b0_out: d doubles; unit-norm direction with invertible Levi combination.
 * Deterministic given the seed. */
statdisc_status statdisc_find_levi_direction(const statdisc_quadric* q,
                                             int trials,
                                             unsigned long long seed,
                                             double* b0_out,
                                             double* sigma_min_out);

/* ---- stationary discs -------------------------------------------------- */

/* a_reim: 2d doubles (re, im per component); b0: d doubles; v_reim: 2n. */
statdisc_status statdisc_disc_build(const statdisc_quadric* q,
                                    const double* a_reim, const double* b0,
                                    const double* v_reim,
                                    statdisc_disc** out);
void statdisc_disc_free(statdisc_disc* disc);

/* ||X||_2 of the underlying pencil solution. */
statdisc_status statdisc_disc_x_norm(const statdisc_disc* disc, double* out);

/* f(zeta) = (h, g); h_reim: 2n doubles, g_reim: 2d doubles; |zeta| <= 1. */
statdisc_status statdisc_disc_eval(const statdisc_disc* disc, double zeta_re,
                                   double zeta_im, double* h_reim,
                                   double* g_reim);

/* Lift (htilde, gtilde) on |zeta| = 1; same layout as statdisc_disc_eval. */
statdisc_status statdisc_disc_eval_lift(const statdisc_disc* disc,
                                        double zeta_re, double zeta_im,
                                        double* htilde_reim,
                                        double* gtilde_reim);

/* Attachment residual over `attachment_samples` boundary points (>= 8) and
 * the negative-Fourier check over `fourier_samples` points (power of two
 * >= 128). pass is 1 when both stay within the default tolerances. Any
 * output pointer may be NULL. */
statdisc_status statdisc_disc_verify(const statdisc_disc* disc,
                                     int attachment_samples,
                                     int fourier_samples,
                                     double* attachment_residual,
                                     double* fourier_negative_max, int* pass);

/* ---- command engine ----------------------------------------------------
 * Runs one CLI-level command described by a JSON config:
 *   {"command": "check|solve-x|disc|verify|jet|jacobian|center|minimal|
 *                defect|scan",
 *    "input_path": "...json" | "quadric": {...inline...},
 *    "a": [[re,im],...], "b0": [...], "V": [[re,im],...],
 *    "samples": N, "seed": N, "trials": N, "step": x,
 *    "radius": x, "probes": N, "dump": bool, "fourier": bool,
 *    "tolerances": {"name": value, ...},
 *    "grid": [{"param":"a|V","index":j,"part":"re|im",
 *              "min":x,"max":x,"count":k}, ...]}
 * Always produces a report document (caller frees with
 * statdisc_string_free) and the CLI exit code: 0 pass/completed,
 * 1 mathematical failure, 2 input error. */
statdisc_status statdisc_run(const char* config_json, char** report_json_out,
                             int* exit_code_out);
void statdisc_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STATDISC_H */
