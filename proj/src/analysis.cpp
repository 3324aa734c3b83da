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

#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "errors.hpp"
#include "text_format.hpp"

namespace pursuit {

namespace {

constexpr double kUsableResidualFactor = 1e-13;  // relative floor for fits

void require_algorithm(const GreedyTrace& trace, Algorithm expected,
                       const char* what) {
  if (trace.algorithm != expected)
    fail(ErrorCode::wrong_algorithm,
         std::string(what) + " needs a " +
             (expected == Algorithm::pga ? "PGA" : "OGA") + " trace, got " +
             algorithm_name(trace.algorithm));
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += e * e;
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
  return fit;
}

// 1-based steps with residual above the relative floor; residuals are
// non-increasing so this is a prefix of the trace
long usable_steps(const GreedyTrace& trace) {
  const double floor = kUsableResidualFactor * trace.initial_norm;
  long n = 0;
  for (const auto& step : trace.steps) {
    if (step.residual_norm <= floor) break;
    ++n;
  }
  return n;
}

}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::theorem_a_recovery: return "theoremA_recovery";
    case TheoremId::theorem_a_exponential: return "theoremA_exponential";
    case TheoremId::theorem1: return "theorem1";
    case TheoremId::theorem2: return "theorem2";
    case TheoremId::energy_recursion: return "energy_recursion";
    case TheoremId::lemma35: return "lemma35";
  }
  return "?";
}

std::string RateFit::to_kv() const {
  std::string out;
  out += "exponent=" + format17(exponent) + "\n";
  out += "intercept=" + format17(intercept) + "\n";
  out += "r_squared=" + format17(r_squared) + "\n";
  out += "m_lo=" + std::to_string(m_lo) + "\n";
  out += "m_hi=" + std::to_string(m_hi) + "\n";
  return out;
}

std::string TheoremReport::to_kv() const {
  std::string out;
  out += std::string("theorem=") + theorem_name(theorem) + "\n";
  out += std::string("holds=") + (holds ? "true" : "false") + "\n";
  out += "worst_margin=" + format17(worst_margin) + "\n";
  out += "worst_step=" + std::to_string(worst_step) + "\n";
  out += "detail=" + detail + "\n";
  return out;
}

std::string TheoremReport::csv_row() const {
  return std::string(theorem_name(theorem)) + "," + (holds ? "true" : "false") +
         "," + format17(worst_margin) + "," + std::to_string(worst_step);
}

TheoremReport check_theorem1(const GreedyTrace& trace, double n1) {
  require_algorithm(trace, Algorithm::pga, "theorem1");
  if (!(n1 > 0.0)) fail(ErrorCode::invalid_argument, "n1 must be positive");

  TheoremReport report;
  report.theorem = TheoremId::theorem1;
  report.holds = true;
  report.worst_margin = n1;  // bound at m=1 with zero residual
  report.worst_step = trace.steps.empty() ? 0 : 1;
  const double slack = 1e-12 * n1;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const double m = static_cast<double>(i + 1);
    const double bound = n1 / std::sqrt(m);
    const double margin = bound - trace.steps[i].residual_norm;
    if (trace.steps[i].residual_norm > bound + slack) report.holds = false;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_step = static_cast<long>(i + 1);
    }
  }
  report.detail = "n1=" + format17(n1) + ";steps=" + std::to_string(trace.steps.size());
  return report;
}

TheoremReport check_theorem2(const GreedyTrace& trace, double p, double np_norm,
                             double mu1) {
  require_algorithm(trace, Algorithm::pga, "theorem2");
  if (!(p >= 1.0 && p < 2.0))
    fail(ErrorCode::bad_exponent, "p must lie in [1, 2), got " + format17(p));
  if (!(np_norm > 0.0)) fail(ErrorCode::invalid_argument, "np_norm must be positive");
  if (!(mu1 >= 0.0 && mu1 < 1.0 / 3.0))
    fail(ErrorCode::hypothesis_violated, "mu1 = " + format17(mu1) + " not in [0, 1/3)");

  const long m_hi = usable_steps(trace);
  if (m_hi < 16)
    fail(ErrorCode::insufficient_steps,
         "only " + std::to_string(m_hi) + " nonzero-residual steps, need 16");
  const long m_lo = std::max<long>(1, m_hi / 4);
  const RateFit fit = fit_decay_exponent(trace, m_lo, m_hi);
  const double threshold = -(1.0 / p - 0.5) + 0.1;

  TheoremReport report;
  report.theorem = TheoremId::theorem2;
  report.holds = fit.exponent <= threshold;
  report.worst_margin = threshold - fit.exponent;
  report.worst_step = m_hi;

  // explicit proof bound on the tracked coefficients
  bool tracked = false;
  bool coeff_ok = true;
  const double coeff_factor = 2.0 / (1.0 - 3.0 * mu1);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (!trace.steps[i].coefficients) continue;
    tracked = true;
    const double m = static_cast<double>(i + 1);
    const double bound = coeff_factor * std::pow(m, -1.0 / p) * np_norm;
    const double max_abs = trace.steps[i].coefficients->max_abs_coeff();
    const double margin = bound - max_abs;
    if (max_abs > bound + 1e-12 * np_norm) coeff_ok = false;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_step = static_cast<long>(i + 1);
    }
  }
  if (tracked && !coeff_ok) report.holds = false;

  report.detail = "exponent=" + format17(fit.exponent) +
                  ";threshold=" + format17(threshold) +
                  ";r_squared=" + format17(fit.r_squared) +
                  ";m_lo=" + std::to_string(fit.m_lo) +
                  ";m_hi=" + std::to_string(fit.m_hi) + ";coeff_bound=" +
                  (tracked ? (coeff_ok ? "ok" : "violated") : "untracked");
  return report;
}

TheoremReport check_exact_recovery(const GreedyTrace& trace,
                                   const std::vector<int>& true_support,
                                   double tol) {
  require_algorithm(trace, Algorithm::oga, "exact recovery");
  if (tol < 0.0) fail(ErrorCode::invalid_argument, "tol must be >= 0");

  std::set<int> selected;
  for (const auto& step : trace.steps) selected.insert(step.selected);
  const std::set<int> expected(true_support.begin(), true_support.end());

  const double final_norm = trace.final_residual_norm();
  const double allowed = tol * trace.initial_norm;

  TheoremReport report;
  report.theorem = TheoremId::theorem_a_recovery;
  const bool support_match = selected == expected;
  const bool count_match = trace.steps.size() == expected.size();
  const bool residual_ok = final_norm <= allowed;
  report.holds = support_match && count_match && residual_ok;
  report.worst_margin = allowed - final_norm;
  report.worst_step = static_cast<long>(trace.steps.size());
  report.detail = "steps=" + std::to_string(trace.steps.size()) +
                  ";expected=" + std::to_string(expected.size()) +
                  ";support_match=" + (support_match ? "true" : "false") +
                  ";final_residual=" + format17(final_norm);
  if (!support_match) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      if (!expected.count(trace.steps[i].selected)) {
        report.detail += ";first_wrong_selection_step=" + std::to_string(i + 1);
        report.worst_step = static_cast<long>(i + 1);
        break;
      }
    }
  }
  return report;
}

TheoremReport check_exponential_decay(const GreedyTrace& trace) {
  TheoremReport report;
  report.theorem = TheoremId::theorem_a_exponential;
  const long n = usable_steps(trace);
  if (n < 16) {
    report.holds = true;
    report.worst_margin = 0.0;
    report.worst_step = static_cast<long>(trace.steps.size());
    report.detail = "finite termination: only " + std::to_string(n) +
                    " nonzero-residual steps; vacuously true";
    return report;
  }
  std::vector<double> x, y;
  x.reserve(n);
  y.reserve(n);
  for (long m = 1; m <= n; ++m) {
    x.push_back(static_cast<double>(m));
    y.push_back(std::log(trace.steps[m - 1].residual_norm));
  }
  const LinearFit fit = least_squares(x, y);
  report.holds = fit.slope < 0.0 && fit.r_squared >= 0.9;
  report.worst_margin = std::min(-fit.slope, fit.r_squared - 0.9);
  report.worst_step = n;
  report.detail = "c_hat=" + format17(-fit.slope) +
                  ";r_squared=" + format17(fit.r_squared) +
                  ";points=" + std::to_string(n);
  return report;
}

TheoremReport check_energy_recursion(const GreedyTrace& trace, double a_bound) {
  require_algorithm(trace, Algorithm::pga, "energy recursion");
  if (!(a_bound > 0.0)) fail(ErrorCode::invalid_argument, "a_bound must be positive");

  // a_m = |f_{m-1}|^2 for m = 1 .. steps+1
  const long count = static_cast<long>(trace.steps.size()) + 1;
  auto a = [&](long m) {
    const double norm = trace.residual_norm_before(static_cast<std::size_t>(m - 1));
    return norm * norm;
  };

  TheoremReport report;
  report.theorem = TheoremId::energy_recursion;
  report.holds = true;
  report.worst_margin = a_bound;
  report.worst_step = 0;

  auto consider = [&](double margin, long step, bool ok) {
    if (!ok) report.holds = false;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_step = step;
    }
  };

  for (long m = 1; m < count; ++m) {
    const double lhs = a(m + 1);
    const double rhs = a(m) * (1.0 - a(m) / a_bound);
    consider(rhs - lhs, m, lhs <= rhs + 1e-9 * a(m));
  }
  for (long m = 1; m <= count; ++m) {
    const double lhs = a(m);
    const double rhs = a_bound / static_cast<double>(m);
    consider(rhs - lhs, std::max<long>(m - 1, 0), lhs <= rhs * (1.0 + 1e-9));
  }
  report.detail = "a_bound=" + format17(a_bound) +
                  ";steps=" + std::to_string(trace.steps.size());
  return report;
}

TheoremReport check_lemma35(const GreedyTrace& trace) {
  require_algorithm(trace, Algorithm::pga, "lemma35");
  if (!trace.initial_coefficients)
    fail(ErrorCode::invalid_argument, "trace has no coefficient tracking");

  TheoremReport report;
  report.theorem = TheoremId::lemma35;
  report.holds = true;
  report.worst_margin = trace.initial_norm;
  report.worst_step = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (i > 0 && !trace.steps[i - 1].coefficients)
      fail(ErrorCode::invalid_argument,
           "step " + std::to_string(i) + " has no coefficient snapshot");
    const SparseRepresentation& before =
        i == 0 ? *trace.initial_coefficients : *trace.steps[i - 1].coefficients;
    const double n1 = before.one_norm();
    if (n1 == 0.0) break;
    const double rn = trace.residual_norm_before(i);
    const double lhs = std::abs(trace.steps[i].inner_product);
    const double rhs = rn * rn / n1;
    const double margin = lhs - rhs;
    if (lhs < rhs * (1.0 - 1e-9)) report.holds = false;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_step = static_cast<long>(i + 1);
    }
  }
  report.detail = "steps=" + std::to_string(trace.steps.size());
  return report;
}

OracleResult best_mterm_oracle(const Dictionary& dict, const Eigen::VectorXd& f,
                               int m) {
  if (m < 1 || m > dict.size())
    fail(ErrorCode::invalid_argument,
         "m must lie in [1, K = " + std::to_string(dict.size()) + "]");
  double combos = 1.0;
  for (int i = 0; i < m; ++i)
    combos *= static_cast<double>(dict.size() - i) / static_cast<double>(i + 1);
  if (combos > 2e6)
    fail(ErrorCode::too_large,
         "binomial(" + std::to_string(dict.size()) + ", " + std::to_string(m) +
             ") exceeds the 2e6 support guard");

  OracleResult best;
  best.error = -1.0;
  std::vector<int> support(m);
  for (int i = 0; i < m; ++i) support[i] = i;
  while (true) {
    bool valid = true;
    double error = 0.0;
    try {
      error = project_onto_atoms(dict, support, f).residual.norm();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::singular_gram) throw;
      valid = false;
    }
    if (valid && (best.error < 0.0 || error < best.error)) {
      best.error = error;
      best.support = support;
    }
    // next combination in lexicographic order
    int pos = m - 1;
    while (pos >= 0 && support[pos] == dict.size() - m + pos) --pos;
    if (pos < 0) break;
    ++support[pos];
    for (int i = pos + 1; i < m; ++i) support[i] = support[i - 1] + 1;
  }
  if (best.error < 0.0)
    fail(ErrorCode::singular_gram, "every size-" + std::to_string(m) +
                                       " support had a singular Gram system");
  return best;
}

RateFit fit_decay_exponent(const GreedyTrace& trace, long m_lo, long m_hi) {
  if (m_lo < 1 || m_hi <= m_lo ||
      m_hi > static_cast<long>(trace.steps.size()))
    fail(ErrorCode::invalid_argument,
         "fit window [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
             "] invalid for a trace of " + std::to_string(trace.steps.size()) +
             " steps");
  const double floor = kUsableResidualFactor * trace.initial_norm;
  std::vector<double> x, y;
  for (long m = m_lo; m <= m_hi; ++m) {
    const double rn = trace.steps[m - 1].residual_norm;
    if (rn <= floor) continue;
    x.push_back(std::log(static_cast<double>(m)));
    y.push_back(std::log(rn));
  }
  if (x.size() < 8)
    fail(ErrorCode::insufficient_steps,
         "only " + std::to_string(x.size()) + " usable points in the window, need 8");
  const LinearFit fit = least_squares(x, y);
  RateFit out;
  out.exponent = fit.slope;
  out.intercept = fit.intercept;
  out.r_squared = fit.r_squared;
  out.m_lo = m_lo;
  out.m_hi = m_hi;
  return out;
}

}  // namespace pursuit
