/* sobemb — sharp constants in periodic Sobolev embeddings H^r(-T,T) -> L_q(-T,T).
 *
 * C interface to the shared library. All functions return a sobemb_status;
 * results go through out-parameters. Opaque handles (profiles, certificate
 * reports) are created by the library and released with the matching _free
 * call. On any non-OK status, sobemb_last_error_message() returns a
 * human-readable description (thread-local storage).
 *
 * Every operation is a pure function of its arguments; concurrent calls from
 * multiple threads are safe. Handles are immutable after creation but must
 * not be freed while another thread reads them.
 */

#ifndef SOBEMB_H
#define SOBEMB_H

#include <stddef.h>

#if defined(_WIN32)
#define SOBEMB_API __declspec(dllexport)
#else
#define SOBEMB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sobemb_status {
  SOBEMB_OK = 0,
  SOBEMB_ERROR_DOMAIN = 1,         /* argument outside an operation's domain */
  SOBEMB_ERROR_DEGENERATE = 2,     /* alpha at/beyond alpha*(q): oval collapsed */
  SOBEMB_ERROR_NO_CONVERGENCE = 3, /* evaluation budget exhausted */
  SOBEMB_ERROR_INCONCLUSIVE = 4,   /* sign changes not isolable at resolution */
  SOBEMB_ERROR_CONSISTENCY = 5,    /* reconstructed object failed an identity */
  SOBEMB_ERROR_INVALID_ARGUMENT = 6 /* null pointer or bad enum value */
} sobemb_status;

SOBEMB_API const char* sobemb_version(void);
SOBEMB_API const char* sobemb_status_name(sobemb_status status);
SOBEMB_API const char* sobemb_last_error_message(void);

/* ---- phase plane ------------------------------------------------------- */

SOBEMB_API sobemb_status sobemb_alpha_star(double q, double* out);

/* order 0..3 selects f, f', f'' or f''' at t. */
SOBEMB_API sobemb_status sobemb_f_eval(double q, double alpha, double t,
                                       int order, double* out);

typedef struct sobemb_oval {
  double q;
  double alpha;
  double x0;
  double xhat;
  double x1;
} sobemb_oval;

SOBEMB_API sobemb_status sobemb_oval_roots(double q, double alpha,
                                           sobemb_oval* out);

SOBEMB_API sobemb_status sobemb_psi_eval(const sobemb_oval* oval, double t,
                                         double* out);

typedef enum sobemb_g_kind {
  SOBEMB_G = 0,
  SOBEMB_G1 = 1,
  SOBEMB_G2 = 2
} sobemb_g_kind;

SOBEMB_API sobemb_status sobemb_g_family_eval(const sobemb_oval* oval, double t,
                                              sobemb_g_kind which, double* out);

typedef enum sobemb_bg_family {
  SOBEMB_BETA = 0,
  SOBEMB_GAMMA = 1
} sobemb_bg_family;

/* order j in 0..3 selects beta_j / gamma_j. */
SOBEMB_API sobemb_status sobemb_beta_gamma_eval(double q, double t,
                                                sobemb_bg_family family,
                                                int order, double* out);

SOBEMB_API sobemb_status sobemb_tau(double z, double q, double* out);
SOBEMB_API sobemb_status sobemb_poly_p(double z, double q, double* out);
SOBEMB_API sobemb_status sobemb_poly_q(double z, double q, double tau,
                                       double* out);

/* ---- quadrature -------------------------------------------------------- */

typedef struct sobemb_quad_result {
  double value;
  double abs_error_estimate;
  long long evaluations;
} sobemb_quad_result;

SOBEMB_API sobemb_status sobemb_period_integral(double q, double alpha,
                                                double tol,
                                                sobemb_quad_result* out);
SOBEMB_API sobemb_status sobemb_period_integral_deriv(double q, double alpha,
                                                      double tol,
                                                      sobemb_quad_result* out);
SOBEMB_API sobemb_status sobemb_elliptic_oracle_q4(double alpha, double* out);
SOBEMB_API sobemb_status sobemb_period_limit(double q, double* out);
SOBEMB_API sobemb_status sobemb_duality_residual(double q, double alpha,
                                                 double tol, double* out);

/* ---- embedding --------------------------------------------------------- */

typedef enum sobemb_constant_status {
  SOBEMB_CONSTANT_EXACT = 0,       /* constant attains the sharp constant */
  SOBEMB_CONSTANT_UPPER_BOUND = 1, /* constant is not a minimizer */
  SOBEMB_CONSTANT_Q_LE_2 = 2       /* q <= 2 regime, constant attains it */
} sobemb_constant_status;

typedef struct sobemb_sharp_constant {
  double value;
  sobemb_constant_status status;
} sobemb_sharp_constant;

SOBEMB_API sobemb_status sobemb_sharp_constant_eval(double q, double r,
                                                    double half_period,
                                                    sobemb_sharp_constant* out);
SOBEMB_API sobemb_status sobemb_smallest_eigenvalue(double q, double r,
                                                    double half_period,
                                                    double* out);
SOBEMB_API sobemb_status sobemb_steklov_reduce(double r, double half_period,
                                               double* out);

/* ---- solutions --------------------------------------------------------- */

SOBEMB_API sobemb_status sobemb_band_index(double q, double half_period,
                                           int* out);

/* Writes min(cap, count) solvable oscillation counts into solvable_n (may be
 * NULL with cap 0); the full count goes to n_count. */
SOBEMB_API sobemb_status sobemb_count_periodic_solutions(double q,
                                                         double half_period,
                                                         int* k_out,
                                                         int* solvable_n,
                                                         size_t cap,
                                                         size_t* n_count);

/* found receives 0 when the period equation has no solution for this n. */
SOBEMB_API sobemb_status sobemb_solve_alpha_for_period(double q,
                                                       double half_period,
                                                       int n, double tol,
                                                       int* found,
                                                       double* alpha_out);

typedef struct sobemb_profile sobemb_profile;

SOBEMB_API sobemb_status sobemb_profile_reconstruct(double q, double alpha,
                                                    int n, double half_period,
                                                    int grid_size,
                                                    sobemb_profile** out);
SOBEMB_API void sobemb_profile_free(sobemb_profile* profile);
SOBEMB_API size_t sobemb_profile_sample_count(const sobemb_profile* profile);
SOBEMB_API sobemb_status sobemb_profile_samples(const sobemb_profile* profile,
                                                double* x, double* y,
                                                size_t cap);

typedef struct sobemb_profile_info {
  double q;
  double alpha;
  double mu;
  double c1;
  double half_period;
  int n;
  double min_y;
  double max_y;
  double period_residual;
  double first_integral_residual;
  double virial_residual;
  double rayleigh_quotient;
} sobemb_profile_info;

SOBEMB_API sobemb_status sobemb_profile_info_get(const sobemb_profile* profile,
                                                 sobemb_profile_info* out);

/* ---- certify ----------------------------------------------------------- */

typedef struct sobemb_report sobemb_report;

SOBEMB_API sobemb_status sobemb_certify_main_lemma(const double* q_grid,
                                                   size_t q_count,
                                                   int alpha_density,
                                                   sobemb_report** out);
SOBEMB_API sobemb_status sobemb_certify_main_lemma_default(int density,
                                                           sobemb_report** out);
SOBEMB_API sobemb_status sobemb_certify_lemma22(double q, double alpha,
                                                sobemb_report** out);
SOBEMB_API sobemb_status sobemb_certify_lemma22_default(int density,
                                                        sobemb_report** out);
SOBEMB_API sobemb_status sobemb_certify_lemma23(double q, double alpha,
                                                sobemb_report** out);
SOBEMB_API sobemb_status sobemb_certify_lemma23_default(int density,
                                                        sobemb_report** out);
SOBEMB_API sobemb_status sobemb_certify_polynomials(int density,
                                                    sobemb_report** out);
SOBEMB_API sobemb_status sobemb_certify_chain(int density, sobemb_report** out);

SOBEMB_API void sobemb_report_free(sobemb_report* report);
SOBEMB_API const char* sobemb_report_name(const sobemb_report* report);
SOBEMB_API const char* sobemb_report_grid_spec(const sobemb_report* report);
SOBEMB_API int sobemb_report_passed(const sobemb_report* report);
SOBEMB_API double sobemb_report_margin(const sobemb_report* report);
SOBEMB_API size_t sobemb_report_witness_count(const sobemb_report* report);

typedef struct sobemb_witness {
  char label[64];
  double point[4];
  int dim;
  double value;
} sobemb_witness;

SOBEMB_API sobemb_status sobemb_report_witness_get(const sobemb_report* report,
                                                   size_t index,
                                                   sobemb_witness* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SOBEMB_H */
