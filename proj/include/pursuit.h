/*
Copyright 2026 the pursuit authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

/*
 * pursuit - greedy sparse approximation over finite dictionaries.
 *
 * C interface of libpursuit. Objects are opaque handles created and
 * destroyed through this API; every fallible call returns a pursuit_status
 * and reports results through out-parameters. On failure the thread-local
 * message behind pursuit_last_error() describes what went wrong.
 */

#ifndef PURSUIT_H
#define PURSUIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(PURSUIT_SHARED)
#  ifdef PURSUIT_BUILD
#    define PURSUIT_API __declspec(dllexport)
#  else
#    define PURSUIT_API __declspec(dllimport)
#  endif
#else
#  define PURSUIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pursuit_status {
  PURSUIT_OK = 0,
  PURSUIT_ERR_NULL_POINTER = 1,
  PURSUIT_ERR_INVALID_ARGUMENT = 2,
  PURSUIT_ERR_ZERO_ATOM = 3,
  PURSUIT_ERR_NORM_VIOLATION = 4,
  PURSUIT_ERR_DUPLICATE_ATOM = 5,
  PURSUIT_ERR_TARGET_UNREACHABLE = 6,
  PURSUIT_ERR_DICTIONARY_MISMATCH = 7,
  PURSUIT_ERR_BAD_EXPONENT = 8,
  PURSUIT_ERR_SPARSITY_TOO_LARGE = 9,
  PURSUIT_ERR_INDEX_OUT_OF_RANGE = 10,
  PURSUIT_ERR_EMPTY_REPRESENTATION = 11,
  PURSUIT_ERR_HYPOTHESIS_VIOLATED = 12,
  PURSUIT_ERR_DIMENSION_MISMATCH = 13,
  PURSUIT_ERR_TRACKING_INCONSISTENT = 14,
  PURSUIT_ERR_SINGULAR_GRAM = 15,
  PURSUIT_ERR_WRONG_ALGORITHM = 16,
  PURSUIT_ERR_INSUFFICIENT_STEPS = 17,
  PURSUIT_ERR_TOO_LARGE = 18,
  PURSUIT_ERR_IO = 19,
  PURSUIT_ERR_PARSE = 20,
  PURSUIT_ERR_INTERNAL = 21
} pursuit_status;

typedef enum pursuit_algorithm {
  PURSUIT_ALG_PGA = 0,
  PURSUIT_ALG_OGA = 1
} pursuit_algorithm;

typedef enum pursuit_stop_reason {
  PURSUIT_STOP_MAX_ITERATIONS = 0,
  PURSUIT_STOP_RESIDUAL_TOLERANCE = 1,
  PURSUIT_STOP_INNER_PRODUCT_TOLERANCE = 2,
  PURSUIT_STOP_STAGNATION = 3
} pursuit_stop_reason;

typedef enum pursuit_theorem {
  PURSUIT_THEOREM_A_RECOVERY = 0,
  PURSUIT_THEOREM_A_EXPONENTIAL = 1,
  PURSUIT_THEOREM_1 = 2,
  PURSUIT_THEOREM_2 = 3,
  PURSUIT_ENERGY_RECURSION = 4,
  PURSUIT_LEMMA_35 = 5
} pursuit_theorem;

/* Opaque handles. */
typedef struct pursuit_dictionary pursuit_dictionary;
typedef struct pursuit_rep pursuit_rep;
typedef struct pursuit_trace pursuit_trace;

/* mu1 is the cumulative coherence (max over atoms of the absolute
 * inner-product row sum), mu the mutual coherence, and
 * [lower_frame, upper_frame] = [1 - 2*mu1, 1 + 2*mu1]. */
typedef struct pursuit_coherence_report {
  double mu1;
  double mu;
  double lower_frame;
  double upper_frame;
  int32_t worst_atom;
} pursuit_coherence_report;

/* Negative tolerances select the defaults 1e-12*|f| (residual) and
 * 1e-14*|f| (inner product); residual_tol == 0 disables that stop. */
typedef struct pursuit_stop_rule {
  int32_t max_iterations;
  double residual_tol;
  double inner_product_tol;
} pursuit_stop_rule;

typedef struct pursuit_lemma_report {
  int32_t holds;            /* holds == (lhs <= rhs + slack_used) */
  double lhs;
  double rhs;
  double slack_used;
  char detail[200];
} pursuit_lemma_report;

typedef struct pursuit_theorem_report {
  int32_t theorem;          /* pursuit_theorem */
  int32_t holds;
  double worst_margin;
  int64_t worst_step;
  char detail[240];
} pursuit_theorem_report;

typedef struct pursuit_rate_fit {
  double exponent;          /* slope of log residual against log m */
  double intercept;
  double r_squared;
  int64_t m_lo;
  int64_t m_hi;
} pursuit_rate_fit;

PURSUIT_API const char* pursuit_version(void);

/* Message for the most recent failing call on this thread. */
PURSUIT_API const char* pursuit_last_error(void);

PURSUIT_API const char* pursuit_status_name(pursuit_status status);

/* Frees strings returned through char** out-parameters. */
PURSUIT_API void pursuit_string_free(char* s);

/* ---------------- dictionaries ---------------- */

/* atoms: column-major dim x count matrix, one unit-norm atom per column.
 * Columns off unit norm by more than 1e-10 but less than 1e-6 are
 * renormalized; worse ones are rejected, as are duplicate atoms (up to
 * sign, tolerance 1e-12) and all-zero columns. */
PURSUIT_API pursuit_status pursuit_dictionary_create(
    int32_t dim, int32_t count, const double* atoms, const char* label,
    pursuit_dictionary** out);

PURSUIT_API pursuit_status pursuit_dictionary_orthonormal(
    int32_t dim, pursuit_dictionary** out);

/* Seeded rejection sampling until the measured cumulative coherence is
 * <= target_mu1, at most max_attempts whole draws. orthonormalize != 0
 * returns an exactly orthonormal seeded basis (requires count <= dim).
 * Fails with PURSUIT_ERR_TARGET_UNREACHABLE when the target cannot be met
 * (always the case for count > dim and any target below 1). */
PURSUIT_API pursuit_status pursuit_dictionary_incoherent(
    int32_t dim, int32_t count, double target_mu1, uint64_t seed,
    int32_t max_attempts, int32_t orthonormalize, pursuit_dictionary** out);

/* Text format: header "dim K", then K lines of dim reals (atom per line),
 * printed to 17 significant digits so values round-trip bit-exactly. */
PURSUIT_API pursuit_status pursuit_dictionary_load(const char* path,
                                                   pursuit_dictionary** out);
PURSUIT_API pursuit_status pursuit_dictionary_save(const pursuit_dictionary* dict,
                                                   const char* path);

PURSUIT_API void pursuit_dictionary_free(pursuit_dictionary* dict);

PURSUIT_API int32_t pursuit_dictionary_dim(const pursuit_dictionary* dict);
PURSUIT_API int32_t pursuit_dictionary_count(const pursuit_dictionary* dict);
PURSUIT_API const char* pursuit_dictionary_label(const pursuit_dictionary* dict);

/* Copies atom `index` into out[0..dim). */
PURSUIT_API pursuit_status pursuit_dictionary_atom(const pursuit_dictionary* dict,
                                                   int32_t index, double* out);

PURSUIT_API pursuit_status pursuit_dictionary_coherence(
    const pursuit_dictionary* dict, pursuit_coherence_report* out);

/* ---------------- sparse representations ---------------- */

PURSUIT_API pursuit_status pursuit_rep_create(const char* dictionary_label,
                                              pursuit_rep** out);
PURSUIT_API void pursuit_rep_free(pursuit_rep* rep);

/* value == 0 removes the entry (zero coefficients are never stored). */
PURSUIT_API pursuit_status pursuit_rep_set(pursuit_rep* rep, int32_t index,
                                           double value);

/* 0.0 outside the support (and for a NULL rep). */
PURSUIT_API double pursuit_rep_coeff(const pursuit_rep* rep, int32_t index);

PURSUIT_API int32_t pursuit_rep_size(const pursuit_rep* rep);

/* Entry i in increasing index order, 0 <= i < pursuit_rep_size(). */
PURSUIT_API pursuit_status pursuit_rep_entry(const pursuit_rep* rep, int32_t i,
                                             int32_t* index, double* value);

/* Text format: "index coefficient" lines terminated by a blank line. */
PURSUIT_API pursuit_status pursuit_rep_load(const char* path,
                                            const char* dictionary_label,
                                            pursuit_rep** out);
PURSUIT_API pursuit_status pursuit_rep_save(const pursuit_rep* rep,
                                            const char* path);

/* (sum |c|^p)^(1/p) for p in [1, 2). */
PURSUIT_API pursuit_status pursuit_rep_quasi_norm(const pursuit_rep* rep,
                                                  double p, double* out);

/* Random support of the given size with magnitudes uniform in
 * [amp_low, amp_high] and random signs; bit-reproducible per seed. */
PURSUIT_API pursuit_status pursuit_gen_sparse_signal(
    const pursuit_dictionary* dict, int32_t sparsity, double amp_low,
    double amp_high, uint64_t seed, pursuit_rep** out);

/* out must hold dim doubles. */
PURSUIT_API pursuit_status pursuit_synthesize(const pursuit_dictionary* dict,
                                              const pursuit_rep* rep,
                                              double* out);

/* Two-sided energy comparison of |sum c g|^2 against
 * (1 -+ 2*mu1) * sum c^2 with additive slack 1e-9 * sum c^2. */
PURSUIT_API pursuit_status pursuit_frame_bounds_check(
    const pursuit_dictionary* dict, const pursuit_rep* coeffs, double* lhs,
    double* mid, double* rhs, int32_t* holds);

/* Selected coefficient becomes c - inner_product, everything else copies. */
PURSUIT_API pursuit_status pursuit_pga_coefficient_step(const pursuit_rep* rep,
                                                        int32_t selected,
                                                        double inner_product,
                                                        pursuit_rep** out);

/* Inner-product deviation bound for f synthesized exactly from rep:
 * |<f, g_lambda0> - c_lambda0| (inside the support) or |<f, g_lambda0>|
 * (outside) against mu1 * max|c| + epsilon. */
PURSUIT_API pursuit_status pursuit_check_lemma2(const pursuit_dictionary* dict,
                                                const pursuit_rep* rep,
                                                int32_t lambda0, double epsilon,
                                                pursuit_lemma_report* out);

/* One-step coefficient descent bound, valid for mu1 < 1/3:
 * sum |c_after|^p <= sum |c_before|^p - 2^-p (1-3mu1)^p max|c_before|^p. */
PURSUIT_API pursuit_status pursuit_check_lemma3_descent(
    const pursuit_rep* before, const pursuit_rep* after, double p, double mu1,
    pursuit_lemma_report* out);

/* ---------------- greedy runs ---------------- */

/* Best single atom for the residual: lowest index within 1e-14 * |residual|
 * of the maximal |<residual, g>|; reports the signed inner product. */
PURSUIT_API pursuit_status pursuit_select_atom(const pursuit_dictionary* dict,
                                               const double* residual,
                                               int32_t* index,
                                               double* inner_product);

/* Pure greedy algorithm on f[0..dim). track may be NULL; when given it must
 * synthesize to f within 1e-10 * |f| and is advanced and snapshotted at
 * every step. stop may be NULL for the defaults. */
PURSUIT_API pursuit_status pursuit_run_pga(const pursuit_dictionary* dict,
                                           const double* f,
                                           const pursuit_stop_rule* stop,
                                           const pursuit_rep* track,
                                           pursuit_trace** out);

/* Orthogonal greedy algorithm; each step reprojects f onto the support. */
PURSUIT_API pursuit_status pursuit_run_oga(const pursuit_dictionary* dict,
                                           const double* f,
                                           const pursuit_stop_rule* stop,
                                           pursuit_trace** out);

/* Least-squares coefficients on an explicit support via the Gram normal
 * equations (Cholesky, pivot floor 1e-12). residual may be NULL; otherwise
 * it receives f - fit and must hold dim doubles. */
PURSUIT_API pursuit_status pursuit_project_onto_atoms(
    const pursuit_dictionary* dict, const int32_t* support,
    int32_t support_len, const double* f, pursuit_rep** coefficients,
    double* residual);

PURSUIT_API void pursuit_trace_free(pursuit_trace* trace);

PURSUIT_API int32_t pursuit_trace_algorithm(const pursuit_trace* trace);
PURSUIT_API int32_t pursuit_trace_stop_reason(const pursuit_trace* trace);
PURSUIT_API int64_t pursuit_trace_steps(const pursuit_trace* trace);
PURSUIT_API double pursuit_trace_initial_norm(const pursuit_trace* trace);

PURSUIT_API pursuit_status pursuit_trace_step(const pursuit_trace* trace,
                                              int64_t i, int32_t* selected,
                                              double* inner_product,
                                              double* residual_norm);

/* Coefficient snapshot after step i (a fresh handle), when recorded. */
PURSUIT_API pursuit_status pursuit_trace_step_coefficients(
    const pursuit_trace* trace, int64_t i, pursuit_rep** out);

/* Tracked representation before the first step, when tracking was on. */
PURSUIT_API pursuit_status pursuit_trace_initial_coefficients(
    const pursuit_trace* trace, pursuit_rep** out);

/* "step,selected,inner_product,residual_norm" rows, steps numbered from 1,
 * reals printed to 17 significant digits. Free with pursuit_string_free. */
PURSUIT_API pursuit_status pursuit_trace_csv(const pursuit_trace* trace,
                                             char** out);

/* One representation file per recorded snapshot: <dir>/step_00001.txt ... */
PURSUIT_API pursuit_status pursuit_trace_export_coefficients(
    const pursuit_trace* trace, const char* dir);

/* ---------------- analysis ---------------- */

/* Residual bound |f_m| <= n1 * m^(-1/2) + 1e-12 * n1 at every step. */
PURSUIT_API pursuit_status pursuit_check_theorem1(const pursuit_trace* trace,
                                                  double n1,
                                                  pursuit_theorem_report* out);

/* Tail log-log decay exponent <= -(1/p - 1/2) + 0.1, plus the explicit
 * tracked-coefficient bound max|c_m| <= 2 (1-3mu1)^-1 m^(-1/p) np_norm. */
PURSUIT_API pursuit_status pursuit_check_theorem2(const pursuit_trace* trace,
                                                  double p, double np_norm,
                                                  double mu1,
                                                  pursuit_theorem_report* out);

PURSUIT_API pursuit_status pursuit_check_exact_recovery(
    const pursuit_trace* trace, const int32_t* true_support,
    int32_t support_len, double tol, pursuit_theorem_report* out);

PURSUIT_API pursuit_status pursuit_check_exponential_decay(
    const pursuit_trace* trace, pursuit_theorem_report* out);

PURSUIT_API pursuit_status pursuit_check_energy_recursion(
    const pursuit_trace* trace, double a_bound, pursuit_theorem_report* out);

PURSUIT_API pursuit_status pursuit_check_lemma35(const pursuit_trace* trace,
                                                 pursuit_theorem_report* out);

/* Exhaustive best m-term approximation error over all supports of size m
 * (needs binomial(K, m) <= 2e6). support_out must hold m entries. */
PURSUIT_API pursuit_status pursuit_best_mterm_oracle(
    const pursuit_dictionary* dict, const double* f, int32_t m, double* error,
    int32_t* support_out);

PURSUIT_API pursuit_status pursuit_fit_decay_exponent(const pursuit_trace* trace,
                                                      int64_t m_lo, int64_t m_hi,
                                                      pursuit_rate_fit* out);

/* key=value text blocks / summary CSV row; free with pursuit_string_free. */
PURSUIT_API pursuit_status pursuit_theorem_report_kv(
    const pursuit_theorem_report* report, char** out);
PURSUIT_API pursuit_status pursuit_theorem_report_csv_row(
    const pursuit_theorem_report* report, char** out);
PURSUIT_API pursuit_status pursuit_rate_fit_kv(const pursuit_rate_fit* fit,
                                               char** out);
PURSUIT_API const char* pursuit_theorem_name(pursuit_theorem theorem);
PURSUIT_API const char* pursuit_stop_reason_name(pursuit_stop_reason reason);

#ifdef __cplusplus
}
#endif

#endif /* PURSUIT_H */
