/* C interface to the magnon library: Bethe eigenstates, exact diagonalization
   checks and two-spin entanglement on the periodic spin-1/2 Heisenberg ring.
   Every call returns an mg_status; on failure mg_last_error() describes it.
   Handles are owned by the caller and released with the matching *_free. */
#ifndef MAGNON_H
#define MAGNON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef MG_BUILDING_LIBRARY
#    define MG_API __declspec(dllexport)
#  else
#    define MG_API __declspec(dllimport)
#  endif
#else
#  define MG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mg_status {
    MG_OK = 0,
    MG_ERR_PARAMETER = 1,
    MG_ERR_RESOURCE = 2,
    MG_ERR_DEGENERATE_STATE = 3,
    MG_ERR_NO_ROOT = 4,
    MG_ERR_MISCLASSIFIED_ROOT = 5,
    MG_ERR_NOT_TRANSLATION_INVARIANT = 6,
    MG_ERR_INTERNAL = 7
} mg_status;

typedef struct mg_state mg_state;
typedef struct mg_roots mg_roots;
typedef struct mg_report mg_report;

MG_API const char* mg_version(void);
MG_API const char* mg_status_string(mg_status status);
/* Message for the last failing call on this thread; "" if none. */
MG_API const char* mg_last_error(void);

/* ---- states ---------------------------------------------------------- */

MG_API mg_status mg_state_one_magnon(int n_sites, int lambda, mg_state** out);
MG_API mg_status mg_state_scattering(int n_sites, double total_k, double relative_k, double phi, mg_state** out);
MG_API mg_status mg_state_cosh_bound(int n_sites, double u, double v, mg_state** out);
MG_API mg_status mg_state_sinh_bound(int n_sites, double u, double v, mg_state** out);
MG_API mg_status mg_state_singular(int n_sites, mg_state** out);
MG_API mg_status mg_state_goldstone(int n_sites, int n_up, mg_state** out);
/* Solves the Bethe equations for the quantum numbers and certifies the result. */
MG_API mg_status mg_state_bethe(int n_sites, const int* lambdas, int count, mg_state** out);
/* Normalized image under the total raising operator. */
MG_API mg_status mg_state_raise(const mg_state* state, mg_state** out);
MG_API void mg_state_free(mg_state* state);

MG_API int mg_state_sites(const mg_state* state);
MG_API int mg_state_magnons(const mg_state* state);
MG_API size_t mg_state_dimension(const mg_state* state);
/* Amplitude of basis index `index`; config has bit (m-1) set when site m is up. */
MG_API mg_status mg_state_amplitude(const mg_state* state, size_t index, double* re, double* im, uint64_t* config);
/* Rayleigh quotient and ||H psi - E psi|| for coupling J. */
MG_API mg_status mg_state_verify(const mg_state* state, double coupling, double* energy, double* residual);

/* ---- entanglement ---------------------------------------------------- */

typedef struct mg_rdm {
    double alpha;   /* both up */
    double beta;    /* p up, q down */
    double gamma_re;
    double gamma_im;
    double delta;   /* p down, q up */
    double epsilon; /* both down */
    int p;
    int q;
} mg_rdm;

/* Sites are 1-based with p < q. */
MG_API mg_status mg_state_rdm(const mg_state* state, int p, int q, mg_rdm* out);
MG_API double mg_concurrence(const mg_rdm* rdm);
/* C_1 .. C_{floor(N/2)} into values[0 ..); *count receives floor(N/2).
   Fails with MG_ERR_NOT_TRANSLATION_INVARIANT unless the state is invariant. */
MG_API mg_status mg_state_profile(const mg_state* state, double* values, int capacity, int* count);
/* Pairs (1, 1+r) without the invariance requirement. */
MG_API mg_status mg_state_pair_profile(const mg_state* state, double* values, int capacity, int* count);

MG_API mg_status mg_goldstone_concurrence(int n_up, int n_sites, double* out);
MG_API mg_status mg_singular_concurrence(int n_sites, int r, double* out);
MG_API mg_status mg_eof_from_concurrence(double c, double* out);

/* ---- roots ----------------------------------------------------------- */

MG_API mg_status mg_solve(int n_sites, const int* lambdas, int count, mg_roots** out);
MG_API void mg_roots_free(mg_roots* roots);
MG_API int mg_roots_count(const mg_roots* roots);
MG_API const char* mg_roots_class(const mg_roots* roots);
MG_API mg_status mg_roots_k(const mg_roots* roots, int a, double* re, double* im);
/* Antisymmetric Bethe phase for 0-based magnon indices a != b. */
MG_API mg_status mg_roots_phi(const mg_roots* roots, int a, int b, double* re, double* im);
MG_API double mg_roots_bae_residual(const mg_roots* roots);

typedef enum mg_bound_kind { MG_BOUND_COSH = 0, MG_BOUND_SINH = 1 } mg_bound_kind;

typedef struct mg_bound_root {
    int lambda; /* sum of the two quantum numbers */
    double u;
    double v;
} mg_bound_root;

/* All bound-state roots of one kind; *count receives the total found. */
MG_API mg_status mg_bound_roots(int n_sites, mg_bound_kind kind, mg_bound_root* roots, int capacity, int* count);

/* ---- reports (tabular command output) --------------------------------- */

typedef enum mg_state_kind {
    MG_STATE_BETHE = 0,
    MG_STATE_SCATTERING = 1, /* p0 = K, p1 = k, p2 = phi */
    MG_STATE_COSH_BOUND = 2, /* p0 = u, p1 = v */
    MG_STATE_SINH_BOUND = 3,
    MG_STATE_SINGULAR = 4,
    MG_STATE_GOLDSTONE = 5   /* count = number of up spins */
} mg_state_kind;

typedef struct mg_state_spec {
    int n_sites;
    mg_state_kind kind;
    const int* lambdas;
    int lambda_count;
    double p0, p1, p2;
    int count;
    int raise; /* Goldstone magnons added afterwards */
} mg_state_spec;

typedef struct mg_figure_spec {
    const char* kind; /* "fig1" .. "fig6" */
    int n_sites;      /* 0 selects the default */
    int points;       /* 0 selects 401 */
    int has_range;
    double lo, hi;
    const int* lambdas;
    int lambda_count;
    int n_min, n_max; /* 0 selects the default */
} mg_figure_spec;

typedef struct mg_survey_spec {
    const char* kind;         /* "sweep", "quench", "ags", "length" */
    int n_sites;
    const char* class_filter; /* NULL or "all" for every class */
    int records;
    int magnons;
    const int* lambdas;
    int lambda_count;
    int n_min, n_max;
} mg_survey_spec;

typedef enum mg_cell_type { MG_CELL_NULL = 0, MG_CELL_REAL = 1, MG_CELL_INTEGER = 2, MG_CELL_TEXT = 3 } mg_cell_type;

typedef struct mg_cell {
    mg_cell_type type;
    double real;
    long long integer;
    const char* text; /* valid while the report lives */
} mg_cell;

MG_API mg_status mg_report_solve(int n_sites, const int* lambdas, int count, mg_report** out);
/* Every two-magnon eigenstate, optionally restricted to one class name. */
MG_API mg_status mg_report_classify(int n_sites, const char* class_filter, mg_report** out);
MG_API mg_status mg_report_state(const mg_state_spec* spec, mg_report** out);
MG_API mg_status mg_report_profile(const mg_state_spec* spec, mg_report** out);
MG_API mg_status mg_report_figure(const mg_figure_spec* spec, mg_report** out);
MG_API mg_status mg_report_table1(mg_report** out);
MG_API mg_status mg_report_survey(const mg_survey_spec* spec, mg_report** out);
MG_API void mg_report_free(mg_report* report);

MG_API const char* mg_report_command(const mg_report* report);
MG_API size_t mg_report_meta_count(const mg_report* report);
MG_API const char* mg_report_meta_key(const mg_report* report, size_t i);
MG_API mg_cell mg_report_meta_value(const mg_report* report, size_t i);
MG_API size_t mg_report_table_count(const mg_report* report);
MG_API const char* mg_report_table_name(const mg_report* report, size_t t);
MG_API size_t mg_report_column_count(const mg_report* report, size_t t);
MG_API const char* mg_report_column_name(const mg_report* report, size_t t, size_t c);
MG_API size_t mg_report_row_count(const mg_report* report, size_t t);
MG_API mg_cell mg_report_cell(const mg_report* report, size_t t, size_t row, size_t c);
/* Per-item failures; a report with errors is not fully certified. */
MG_API size_t mg_report_error_count(const mg_report* report);
MG_API const char* mg_report_error(const mg_report* report, size_t i);

#ifdef __cplusplus
}
#endif

#endif
