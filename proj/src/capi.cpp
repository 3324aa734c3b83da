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

#define PURSUIT_BUILD

#include "pursuit.h"

#include <cstring>
#include <new>
#include <string>

#include "analysis.hpp"
#include "dictionary.hpp"
#include "errors.hpp"
#include "greedy.hpp"
#include "signals.hpp"
#include "sparse_rep.hpp"

using namespace pursuit;

struct pursuit_dictionary {
  Dictionary impl;
};
struct pursuit_rep {
  SparseRepresentation impl;
};
struct pursuit_trace {
  GreedyTrace impl;
};

namespace {

thread_local std::string g_last_error;

pursuit_status set_error(pursuit_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
pursuit_status guarded(Fn&& fn) {
  try {
    fn();
    return PURSUIT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<pursuit_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PURSUIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PURSUIT_ERR_INTERNAL;
  }
}

pursuit_status require(bool ok, const char* what) {
  return ok ? PURSUIT_OK : set_error(PURSUIT_ERR_NULL_POINTER, what);
}

void copy_detail(char* dst, size_t cap, const std::string& src) {
  const size_t n = src.size() < cap - 1 ? src.size() : cap - 1;
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

void fill_report(pursuit_theorem_report* out, const TheoremReport& r) {
  out->theorem = static_cast<int32_t>(r.theorem);
  out->holds = r.holds ? 1 : 0;
  out->worst_margin = r.worst_margin;
  out->worst_step = r.worst_step;
  copy_detail(out->detail, sizeof(out->detail), r.detail);
}

void fill_report(pursuit_lemma_report* out, const LemmaReport& r) {
  out->holds = r.holds ? 1 : 0;
  out->lhs = r.lhs;
  out->rhs = r.rhs;
  out->slack_used = r.slack_used;
  copy_detail(out->detail, sizeof(out->detail), r.detail);
}

TheoremReport report_from(const pursuit_theorem_report* in) {
  TheoremReport r;
  r.theorem = static_cast<TheoremId>(in->theorem);
  r.holds = in->holds != 0;
  r.worst_margin = in->worst_margin;
  r.worst_step = in->worst_step;
  r.detail = in->detail;
  return r;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

StopRule stop_from(const pursuit_stop_rule* stop) {
  StopRule rule;
  if (stop) {
    rule.max_iterations = stop->max_iterations;
    rule.residual_tol = stop->residual_tol;
    rule.inner_product_tol = stop->inner_product_tol;
  }
  return rule;
}

}  // namespace

extern "C" {

const char* pursuit_version(void) { return "0.1.0"; }

const char* pursuit_last_error(void) { return g_last_error.c_str(); }

const char* pursuit_status_name(pursuit_status status) {
  switch (status) {
    case PURSUIT_OK: return "ok";
    case PURSUIT_ERR_NULL_POINTER: return "null_pointer";
    case PURSUIT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case PURSUIT_ERR_ZERO_ATOM: return "zero_atom";
    case PURSUIT_ERR_NORM_VIOLATION: return "norm_violation";
    case PURSUIT_ERR_DUPLICATE_ATOM: return "duplicate_atom";
    case PURSUIT_ERR_TARGET_UNREACHABLE: return "target_unreachable";
    case PURSUIT_ERR_DICTIONARY_MISMATCH: return "dictionary_mismatch";
    case PURSUIT_ERR_BAD_EXPONENT: return "bad_exponent";
    case PURSUIT_ERR_SPARSITY_TOO_LARGE: return "sparsity_too_large";
    case PURSUIT_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case PURSUIT_ERR_EMPTY_REPRESENTATION: return "empty_representation";
    case PURSUIT_ERR_HYPOTHESIS_VIOLATED: return "hypothesis_violated";
    case PURSUIT_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case PURSUIT_ERR_TRACKING_INCONSISTENT: return "tracking_inconsistent";
    case PURSUIT_ERR_SINGULAR_GRAM: return "singular_gram";
    case PURSUIT_ERR_WRONG_ALGORITHM: return "wrong_algorithm";
    case PURSUIT_ERR_INSUFFICIENT_STEPS: return "insufficient_steps";
    case PURSUIT_ERR_TOO_LARGE: return "too_large";
    case PURSUIT_ERR_IO: return "io_error";
    case PURSUIT_ERR_PARSE: return "parse_error";
    case PURSUIT_ERR_INTERNAL: return "internal";
  }
  return "?";
}

void pursuit_string_free(char* s) { delete[] s; }

/* ---------------- dictionaries ---------------- */

pursuit_status pursuit_dictionary_create(int32_t dim, int32_t count,
                                         const double* atoms, const char* label,
                                         pursuit_dictionary** out) {
  if (auto st = require(atoms && out, "atoms/out must not be NULL")) return st;
  return guarded([&] {
    if (dim < 1 || count < 1)
      fail(ErrorCode::invalid_argument, "dim and count must be >= 1");
    Eigen::MatrixXd m = Eigen::Map<const Eigen::MatrixXd>(atoms, dim, count);
    *out = new pursuit_dictionary{Dictionary(std::move(m), label ? label : "")};
  });
}

pursuit_status pursuit_dictionary_orthonormal(int32_t dim,
                                              pursuit_dictionary** out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return guarded([&] { *out = new pursuit_dictionary{Dictionary::orthonormal(dim)}; });
}

pursuit_status pursuit_dictionary_incoherent(int32_t dim, int32_t count,
                                             double target_mu1, uint64_t seed,
                                             int32_t max_attempts,
                                             int32_t orthonormalize,
                                             pursuit_dictionary** out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return guarded([&] {
    *out = new pursuit_dictionary{Dictionary::incoherent(
        dim, count, target_mu1, seed, max_attempts, orthonormalize != 0)};
  });
}

pursuit_status pursuit_dictionary_load(const char* path,
                                       pursuit_dictionary** out) {
  if (auto st = require(path && out, "path/out must not be NULL")) return st;
  return guarded([&] { *out = new pursuit_dictionary{Dictionary::load(path)}; });
}

pursuit_status pursuit_dictionary_save(const pursuit_dictionary* dict,
                                       const char* path) {
  if (auto st = require(dict && path, "dict/path must not be NULL")) return st;
  return guarded([&] { dict->impl.save(path); });
}

void pursuit_dictionary_free(pursuit_dictionary* dict) { delete dict; }

int32_t pursuit_dictionary_dim(const pursuit_dictionary* dict) {
  return dict ? dict->impl.dim() : 0;
}

int32_t pursuit_dictionary_count(const pursuit_dictionary* dict) {
  return dict ? dict->impl.size() : 0;
}

const char* pursuit_dictionary_label(const pursuit_dictionary* dict) {
  return dict ? dict->impl.label().c_str() : "";
}

pursuit_status pursuit_dictionary_atom(const pursuit_dictionary* dict,
                                       int32_t index, double* out) {
  if (auto st = require(dict && out, "dict/out must not be NULL")) return st;
  return guarded([&] {
    Eigen::VectorXd atom = dict->impl.atom(index);
    std::memcpy(out, atom.data(), sizeof(double) * atom.size());
  });
}

pursuit_status pursuit_dictionary_coherence(const pursuit_dictionary* dict,
                                            pursuit_coherence_report* out) {
  if (auto st = require(dict && out, "dict/out must not be NULL")) return st;
  const CoherenceReport& r = dict->impl.coherence();
  out->mu1 = r.mu1;
  out->mu = r.mu;
  out->lower_frame = r.lower_frame;
  out->upper_frame = r.upper_frame;
  out->worst_atom = r.worst_atom;
  return PURSUIT_OK;
}

/* ---------------- sparse representations ---------------- */

pursuit_status pursuit_rep_create(const char* dictionary_label,
                                  pursuit_rep** out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return guarded([&] {
    *out = new pursuit_rep{
        SparseRepresentation(dictionary_label ? dictionary_label : "")};
  });
}

void pursuit_rep_free(pursuit_rep* rep) { delete rep; }

pursuit_status pursuit_rep_set(pursuit_rep* rep, int32_t index, double value) {
  if (auto st = require(rep != nullptr, "rep must not be NULL")) return st;
  return guarded([&] { rep->impl.set_coeff(index, value); });
}

double pursuit_rep_coeff(const pursuit_rep* rep, int32_t index) {
  return rep ? rep->impl.coeff(index) : 0.0;
}

int32_t pursuit_rep_size(const pursuit_rep* rep) {
  return rep ? rep->impl.support_size() : 0;
}

pursuit_status pursuit_rep_entry(const pursuit_rep* rep, int32_t i,
                                 int32_t* index, double* value) {
  if (auto st = require(rep && index && value, "rep/index/value must not be NULL"))
    return st;
  return guarded([&] {
    if (i < 0 || i >= rep->impl.support_size())
      fail(ErrorCode::index_out_of_range, "entry " + std::to_string(i));
    auto it = rep->impl.entries().begin();
    std::advance(it, i);
    *index = it->first;
    *value = it->second;
  });
}

pursuit_status pursuit_rep_load(const char* path, const char* dictionary_label,
                                pursuit_rep** out) {
  if (auto st = require(path && out, "path/out must not be NULL")) return st;
  return guarded([&] {
    *out = new pursuit_rep{SparseRepresentation::load(
        path, dictionary_label ? dictionary_label : "")};
  });
}

pursuit_status pursuit_rep_save(const pursuit_rep* rep, const char* path) {
  if (auto st = require(rep && path, "rep/path must not be NULL")) return st;
  return guarded([&] { rep->impl.save(path); });
}

pursuit_status pursuit_rep_quasi_norm(const pursuit_rep* rep, double p,
                                      double* out) {
  if (auto st = require(rep && out, "rep/out must not be NULL")) return st;
  return guarded([&] { *out = rep_quasi_norm(rep->impl, p); });
}

pursuit_status pursuit_gen_sparse_signal(const pursuit_dictionary* dict,
                                         int32_t sparsity, double amp_low,
                                         double amp_high, uint64_t seed,
                                         pursuit_rep** out) {
  if (auto st = require(dict && out, "dict/out must not be NULL")) return st;
  return guarded([&] {
    *out = new pursuit_rep{
        gen_sparse_signal(dict->impl, sparsity, amp_low, amp_high, seed)};
  });
}

pursuit_status pursuit_synthesize(const pursuit_dictionary* dict,
                                  const pursuit_rep* rep, double* out) {
  if (auto st = require(dict && rep && out, "dict/rep/out must not be NULL"))
    return st;
  return guarded([&] {
    Eigen::VectorXd f = synthesize(dict->impl, rep->impl);
    std::memcpy(out, f.data(), sizeof(double) * f.size());
  });
}

pursuit_status pursuit_frame_bounds_check(const pursuit_dictionary* dict,
                                          const pursuit_rep* coeffs, double* lhs,
                                          double* mid, double* rhs,
                                          int32_t* holds) {
  if (auto st = require(dict && coeffs && lhs && mid && rhs && holds,
                        "dict/coeffs/outputs must not be NULL"))
    return st;
  return guarded([&] {
    FrameBoundsResult r = frame_bounds_check(dict->impl, coeffs->impl);
    *lhs = r.lhs;
    *mid = r.mid;
    *rhs = r.rhs;
    *holds = r.holds ? 1 : 0;
  });
}

pursuit_status pursuit_pga_coefficient_step(const pursuit_rep* rep,
                                            int32_t selected,
                                            double inner_product,
                                            pursuit_rep** out) {
  if (auto st = require(rep && out, "rep/out must not be NULL")) return st;
  return guarded([&] {
    *out = new pursuit_rep{pga_coefficient_step(rep->impl, selected, inner_product)};
  });
}

pursuit_status pursuit_check_lemma2(const pursuit_dictionary* dict,
                                    const pursuit_rep* rep, int32_t lambda0,
                                    double epsilon, pursuit_lemma_report* out) {
  if (auto st = require(dict && rep && out, "dict/rep/out must not be NULL"))
    return st;
  return guarded([&] {
    fill_report(out, check_lemma2(dict->impl, rep->impl, lambda0, epsilon));
  });
}

pursuit_status pursuit_check_lemma3_descent(const pursuit_rep* before,
                                            const pursuit_rep* after, double p,
                                            double mu1,
                                            pursuit_lemma_report* out) {
  if (auto st = require(before && after && out, "before/after/out must not be NULL"))
    return st;
  return guarded([&] {
    fill_report(out, check_lemma3_descent(before->impl, after->impl, p, mu1));
  });
}

/* ---------------- greedy runs ---------------- */

pursuit_status pursuit_select_atom(const pursuit_dictionary* dict,
                                   const double* residual, int32_t* index,
                                   double* inner_product) {
  if (auto st = require(dict && residual && index && inner_product,
                        "dict/residual/outputs must not be NULL"))
    return st;
  return guarded([&] {
    Eigen::VectorXd r =
        Eigen::Map<const Eigen::VectorXd>(residual, dict->impl.dim());
    Selection s = select_atom(dict->impl, r);
    *index = s.index;
    *inner_product = s.inner_product;
  });
}

pursuit_status pursuit_run_pga(const pursuit_dictionary* dict, const double* f,
                               const pursuit_stop_rule* stop,
                               const pursuit_rep* track, pursuit_trace** out) {
  if (auto st = require(dict && f && out, "dict/f/out must not be NULL")) return st;
  return guarded([&] {
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(f, dict->impl.dim());
    *out = new pursuit_trace{run_pga(dict->impl, v, stop_from(stop),
                                     track ? &track->impl : nullptr)};
  });
}

pursuit_status pursuit_run_oga(const pursuit_dictionary* dict, const double* f,
                               const pursuit_stop_rule* stop,
                               pursuit_trace** out) {
  if (auto st = require(dict && f && out, "dict/f/out must not be NULL")) return st;
  return guarded([&] {
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(f, dict->impl.dim());
    *out = new pursuit_trace{run_oga(dict->impl, v, stop_from(stop))};
  });
}

pursuit_status pursuit_project_onto_atoms(const pursuit_dictionary* dict,
                                          const int32_t* support,
                                          int32_t support_len, const double* f,
                                          pursuit_rep** coefficients,
                                          double* residual) {
  if (auto st = require(dict && support && f && coefficients,
                        "dict/support/f/coefficients must not be NULL"))
    return st;
  return guarded([&] {
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(f, dict->impl.dim());
    std::vector<int> idx(support, support + support_len);
    Projection proj = project_onto_atoms(dict->impl, idx, v);
    if (residual)
      std::memcpy(residual, proj.residual.data(),
                  sizeof(double) * proj.residual.size());
    *coefficients = new pursuit_rep{std::move(proj.coefficients)};
  });
}

void pursuit_trace_free(pursuit_trace* trace) { delete trace; }

int32_t pursuit_trace_algorithm(const pursuit_trace* trace) {
  return trace && trace->impl.algorithm == Algorithm::oga ? PURSUIT_ALG_OGA
                                                          : PURSUIT_ALG_PGA;
}

int32_t pursuit_trace_stop_reason(const pursuit_trace* trace) {
  return trace ? static_cast<int32_t>(trace->impl.stop_reason)
               : PURSUIT_STOP_MAX_ITERATIONS;
}

int64_t pursuit_trace_steps(const pursuit_trace* trace) {
  return trace ? static_cast<int64_t>(trace->impl.steps.size()) : 0;
}

double pursuit_trace_initial_norm(const pursuit_trace* trace) {
  return trace ? trace->impl.initial_norm : 0.0;
}

pursuit_status pursuit_trace_step(const pursuit_trace* trace, int64_t i,
                                  int32_t* selected, double* inner_product,
                                  double* residual_norm) {
  if (auto st = require(trace && selected && inner_product && residual_norm,
                        "trace/outputs must not be NULL"))
    return st;
  return guarded([&] {
    if (i < 0 || i >= static_cast<int64_t>(trace->impl.steps.size()))
      fail(ErrorCode::index_out_of_range, "step " + std::to_string(i));
    const StepRecord& rec = trace->impl.steps[static_cast<std::size_t>(i)];
    *selected = rec.selected;
    *inner_product = rec.inner_product;
    *residual_norm = rec.residual_norm;
  });
}

pursuit_status pursuit_trace_step_coefficients(const pursuit_trace* trace,
                                               int64_t i, pursuit_rep** out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded([&] {
    if (i < 0 || i >= static_cast<int64_t>(trace->impl.steps.size()))
      fail(ErrorCode::index_out_of_range, "step " + std::to_string(i));
    const auto& coeffs = trace->impl.steps[static_cast<std::size_t>(i)].coefficients;
    if (!coeffs)
      fail(ErrorCode::invalid_argument,
           "step " + std::to_string(i) + " has no coefficient snapshot");
    *out = new pursuit_rep{*coeffs};
  });
}

pursuit_status pursuit_trace_initial_coefficients(const pursuit_trace* trace,
                                                  pursuit_rep** out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded([&] {
    if (!trace->impl.initial_coefficients)
      fail(ErrorCode::invalid_argument, "trace has no coefficient tracking");
    *out = new pursuit_rep{*trace->impl.initial_coefficients};
  });
}

pursuit_status pursuit_trace_csv(const pursuit_trace* trace, char** out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded([&] { *out = dup_string(trace->impl.to_csv()); });
}

pursuit_status pursuit_trace_export_coefficients(const pursuit_trace* trace,
                                                 const char* dir) {
  if (auto st = require(trace && dir, "trace/dir must not be NULL")) return st;
  return guarded([&] { trace->impl.export_coefficients(dir); });
}

/* ---------------- analysis ---------------- */

pursuit_status pursuit_check_theorem1(const pursuit_trace* trace, double n1,
                                      pursuit_theorem_report* out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded([&] { fill_report(out, check_theorem1(trace->impl, n1)); });
}

pursuit_status pursuit_check_theorem2(const pursuit_trace* trace, double p,
                                      double np_norm, double mu1,
                                      pursuit_theorem_report* out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded(
      [&] { fill_report(out, check_theorem2(trace->impl, p, np_norm, mu1)); });
}

pursuit_status pursuit_check_exact_recovery(const pursuit_trace* trace,
                                            const int32_t* true_support,
                                            int32_t support_len, double tol,
                                            pursuit_theorem_report* out) {
  if (auto st = require(trace && out && (true_support || support_len == 0),
                        "trace/support/out must not be NULL"))
    return st;
  return guarded([&] {
    std::vector<int> support(true_support, true_support + support_len);
    fill_report(out, check_exact_recovery(trace->impl, support, tol));
  });
}

pursuit_status pursuit_check_exponential_decay(const pursuit_trace* trace,
                                               pursuit_theorem_report* out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded([&] { fill_report(out, check_exponential_decay(trace->impl)); });
}

pursuit_status pursuit_check_energy_recursion(const pursuit_trace* trace,
                                              double a_bound,
                                              pursuit_theorem_report* out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded(
      [&] { fill_report(out, check_energy_recursion(trace->impl, a_bound)); });
}

pursuit_status pursuit_check_lemma35(const pursuit_trace* trace,
                                     pursuit_theorem_report* out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded([&] { fill_report(out, check_lemma35(trace->impl)); });
}

pursuit_status pursuit_best_mterm_oracle(const pursuit_dictionary* dict,
                                         const double* f, int32_t m,
                                         double* error, int32_t* support_out) {
  if (auto st = require(dict && f && error && support_out,
                        "dict/f/outputs must not be NULL"))
    return st;
  return guarded([&] {
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(f, dict->impl.dim());
    OracleResult r = best_mterm_oracle(dict->impl, v, m);
    *error = r.error;
    for (std::size_t i = 0; i < r.support.size(); ++i)
      support_out[i] = r.support[i];
  });
}

pursuit_status pursuit_fit_decay_exponent(const pursuit_trace* trace,
                                          int64_t m_lo, int64_t m_hi,
                                          pursuit_rate_fit* out) {
  if (auto st = require(trace && out, "trace/out must not be NULL")) return st;
  return guarded([&] {
    RateFit fit = fit_decay_exponent(trace->impl, m_lo, m_hi);
    out->exponent = fit.exponent;
    out->intercept = fit.intercept;
    out->r_squared = fit.r_squared;
    out->m_lo = fit.m_lo;
    out->m_hi = fit.m_hi;
  });
}

pursuit_status pursuit_theorem_report_kv(const pursuit_theorem_report* report,
                                         char** out) {
  if (auto st = require(report && out, "report/out must not be NULL")) return st;
  return guarded([&] { *out = dup_string(report_from(report).to_kv()); });
}

pursuit_status pursuit_theorem_report_csv_row(const pursuit_theorem_report* report,
                                              char** out) {
  if (auto st = require(report && out, "report/out must not be NULL")) return st;
  return guarded([&] { *out = dup_string(report_from(report).csv_row()); });
}

pursuit_status pursuit_rate_fit_kv(const pursuit_rate_fit* fit, char** out) {
  if (auto st = require(fit && out, "fit/out must not be NULL")) return st;
  return guarded([&] {
    RateFit f;
    f.exponent = fit->exponent;
    f.intercept = fit->intercept;
    f.r_squared = fit->r_squared;
    f.m_lo = fit->m_lo;
    f.m_hi = fit->m_hi;
    *out = dup_string(f.to_kv());
  });
}

const char* pursuit_theorem_name(pursuit_theorem theorem) {
  return theorem_name(static_cast<TheoremId>(theorem));
}

const char* pursuit_stop_reason_name(pursuit_stop_reason reason) {
  return stop_reason_name(static_cast<StopReason>(reason));
}

}  // extern "C"
