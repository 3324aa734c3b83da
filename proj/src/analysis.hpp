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

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "greedy.hpp"

namespace pursuit {

enum class TheoremId {
  theorem_a_recovery,
  theorem_a_exponential,
  theorem1,
  theorem2,
  energy_recursion,
  lemma35,
};

const char* theorem_name(TheoremId id);

// Log-log least-squares fit of the residual decay over a step window.
struct RateFit {
  double exponent = 0.0;    // slope of log |f_m| against log m
  double intercept = 0.0;
  double r_squared = 0.0;
  long m_lo = 0;
  long m_hi = 0;
  std::string to_kv() const;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::theorem1;
  bool holds = false;
  double worst_margin = 0.0;
  long worst_step = 0;
  std::string detail;
  std::string to_kv() const;
  std::string csv_row() const;  // "theorem,holds,worst_margin,worst_step"
};

// |f_m| <= n1 * m^(-1/2) + 1e-12 * n1 for every recorded step m >= 1, where
// n1 certifies an upper bound on the 1-quasi-norm (e.g. the generating
// representation's 1-norm). Caller is responsible for the mu1 < 1/3 regime.
TheoremReport check_theorem1(const GreedyTrace& trace, double n1);

// Tail decay-exponent test: the log-log slope over [m_hi/4, m_hi] must be
// <= -(1/p - 1/2) + 0.1 (the multiplicative constants are existential).
// When coefficient snapshots are present, additionally verifies
//   max|c_{.,m}| <= 2 (1 - 3 mu1)^-1 m^(-1/p) * np_norm
// at every step, whose constant is explicit. mu1 must be < 1/3.
TheoremReport check_theorem2(const GreedyTrace& trace, double p, double np_norm,
                             double mu1);

// Exact-recovery audit: final residual <= tol * |f_0|, selected atoms equal
// the true support, and the step count matches its size.
TheoremReport check_exact_recovery(const GreedyTrace& trace,
                                   const std::vector<int>& true_support,
                                   double tol);

// Semi-log regression of |f_m| against m over the nonzero-residual steps:
// holds when the slope is negative with r^2 >= 0.9. Fewer than 16 usable
// steps counts as finite termination and holds vacuously.
TheoremReport check_exponential_decay(const GreedyTrace& trace);

// With a_m = |f_{m-1}|^2 and A = a_bound: verifies a_{m+1} <= a_m (1 - a_m/A)
// and the consequence a_m <= A/m at every step, within 1e-9 relative slack.
TheoremReport check_energy_recursion(const GreedyTrace& trace, double a_bound);

// Along a coefficient-tracked run: |<f_m, g_{m+1}>| >= |f_m|^2 / N1(m) where
// N1(m) is the tracked representation's 1-norm entering the step.
TheoremReport check_lemma35(const GreedyTrace& trace);

struct OracleResult {
  double error = 0.0;
  std::vector<int> support;
};

// Exhaustive best m-term approximation: every size-m support is evaluated by
// project_onto_atoms (singular ones skipped); ties resolve to the
// lexicographically smallest support. Guarded by binomial(K, m) <= 2e6.
OracleResult best_mterm_oracle(const Dictionary& dict, const Eigen::VectorXd& f,
                               int m);

// Ordinary least squares of log |f_m| against log m over [m_lo, m_hi],
// skipping residuals below 1e-13 * |f_0|; needs at least 8 usable points.
RateFit fit_decay_exponent(const GreedyTrace& trace, long m_lo, long m_hi);

}  // namespace pursuit
