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
#include <cstdint>
#include <string>

#include "dictionary.hpp"
#include "sparse_rep.hpp"

namespace pursuit {

// Uniform result carrier for the inequality checks below.
struct LemmaReport {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack_used = 0.0;   // holds == (lhs <= rhs + slack_used)
  std::string detail;
};

// f = sum over the support of c_lambda * g_lambda
Eigen::VectorXd synthesize(const Dictionary& dict, const SparseRepresentation& rep);

// (sum |c|^p)^(1/p); p restricted to [1, 2)
double rep_quasi_norm(const SparseRepresentation& rep, double p);

// Uniformly random support of the given size, magnitudes uniform in
// [amp_low, amp_high], random signs. Bit-reproducible per seed.
SparseRepresentation gen_sparse_signal(const Dictionary& dict, int sparsity,
                                       double amp_low, double amp_high,
                                       std::uint64_t seed);

// Coefficient-tracking update for one pursuit step: the selected coefficient
// becomes c - inner_product (starting from 0 if the index was outside the
// support); exact zeros drop out of the map.
SparseRepresentation pga_coefficient_step(const SparseRepresentation& rep,
                                          int selected, double inner_product);

// Inner-product deviation bound for f synthesized exactly from rep:
//   lambda0 in support:  |<f, g_lambda0> - c_lambda0| <= mu1 * max|c| + eps
//   lambda0 outside:     |<f, g_lambda0>|             <= mu1 * max|c| + eps
// compared non-strictly with rounding slack 1e-12 * (1 + max|c|).
LemmaReport check_lemma2(const Dictionary& dict, const SparseRepresentation& rep,
                         int lambda0, double epsilon);

// One-step coefficient descent for mu1 < 1/3:
//   sum |c_after|^p <= sum |c_before|^p - 2^-p (1 - 3 mu1)^p max|c_before|^p
// detail also records whether max|c_after| <= max|c_before| and whether the
// support grew (a hypothesis-regime exit, not an error).
LemmaReport check_lemma3_descent(const SparseRepresentation& before,
                                 const SparseRepresentation& after, double p,
                                 double mu1);

}  // namespace pursuit
