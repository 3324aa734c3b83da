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

#include "signals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"
#include "text_format.hpp"

namespace pursuit {

namespace {

void require_bound(const Dictionary& dict, const SparseRepresentation& rep) {
  if (!rep.dictionary_label().empty() && !dict.label().empty() &&
      rep.dictionary_label() != dict.label())
    fail(ErrorCode::dictionary_mismatch,
         "representation is bound to '" + rep.dictionary_label() +
             "', dictionary is '" + dict.label() + "'");
  if (!rep.empty() && rep.entries().rbegin()->first >= dict.size())
    fail(ErrorCode::dictionary_mismatch,
         "representation index " + std::to_string(rep.entries().rbegin()->first) +
             " >= K = " + std::to_string(dict.size()));
}

}  // namespace

Eigen::VectorXd synthesize(const Dictionary& dict, const SparseRepresentation& rep) {
  require_bound(dict, rep);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(dict.dim());
  for (const auto& [index, value] : rep.entries()) f += value * dict.atoms().col(index);
  return f;
}

double rep_quasi_norm(const SparseRepresentation& rep, double p) {
  if (!(p >= 1.0 && p < 2.0))
    fail(ErrorCode::bad_exponent, "p must lie in [1, 2), got " + format17(p));
  if (rep.empty()) return 0.0;
  return std::pow(rep.power_sum(p), 1.0 / p);
}

SparseRepresentation gen_sparse_signal(const Dictionary& dict, int sparsity,
                                       double amp_low, double amp_high,
                                       std::uint64_t seed) {
  if (sparsity < 1) fail(ErrorCode::invalid_argument, "sparsity must be >= 1");
  if (sparsity > dict.size())
    fail(ErrorCode::sparsity_too_large,
         "sparsity " + std::to_string(sparsity) + " > K = " +
             std::to_string(dict.size()));
  if (!(amp_low > 0.0) || !(amp_low <= amp_high))
    fail(ErrorCode::invalid_argument, "need 0 < amp_low <= amp_high");

  SeededRng rng(seed);
  std::vector<int> pool(dict.size());
  std::iota(pool.begin(), pool.end(), 0);
  SparseRepresentation rep(dict.label());
  for (int k = 0; k < sparsity; ++k) {
    const std::size_t j =
        k + static_cast<std::size_t>(rng.next_below(pool.size() - k));
    std::swap(pool[k], pool[j]);
    const double magnitude = rng.uniform(amp_low, amp_high);
    const double sign = (rng.next_u64() & 1u) ? -1.0 : 1.0;
    rep.set_coeff(pool[k], sign * magnitude);
  }
  return rep;
}

SparseRepresentation pga_coefficient_step(const SparseRepresentation& rep,
                                          int selected, double inner_product) {
  if (selected < 0)
    fail(ErrorCode::index_out_of_range,
         "negative atom index " + std::to_string(selected));
  SparseRepresentation out = rep;
  out.set_coeff(selected, rep.coeff(selected) - inner_product);
  return out;
}

LemmaReport check_lemma2(const Dictionary& dict, const SparseRepresentation& rep,
                         int lambda0, double epsilon) {
  if (rep.empty()) fail(ErrorCode::empty_representation, "representation is empty");
  if (epsilon < 0.0) fail(ErrorCode::invalid_argument, "epsilon must be >= 0");
  if (lambda0 < 0 || lambda0 >= dict.size())
    fail(ErrorCode::index_out_of_range, "lambda0 = " + std::to_string(lambda0));
  require_bound(dict, rep);

  const Eigen::VectorXd f = synthesize(dict, rep);
  const double ip = dict.atoms().col(lambda0).dot(f);
  const double max_abs = rep.max_abs_coeff();
  const bool in_support = rep.contains(lambda0);

  LemmaReport r;
  r.lhs = in_support ? std::abs(ip - rep.coeff(lambda0)) : std::abs(ip);
  r.rhs = dict.coherence().mu1 * max_abs + epsilon;
  r.slack_used = 1e-12 * (1.0 + max_abs);
  r.holds = r.lhs <= r.rhs + r.slack_used;
  r.detail = std::string("lambda0 ") +
             (in_support ? "in support" : "outside support") +
             "; inner_product=" + format17(ip);
  return r;
}

LemmaReport check_lemma3_descent(const SparseRepresentation& before,
                                 const SparseRepresentation& after, double p,
                                 double mu1) {
  if (!(p >= 1.0 && p < 2.0))
    fail(ErrorCode::bad_exponent, "p must lie in [1, 2), got " + format17(p));
  if (!(mu1 >= 0.0))
    fail(ErrorCode::invalid_argument, "mu1 must be >= 0");
  if (mu1 >= 1.0 / 3.0)
    fail(ErrorCode::hypothesis_violated, "mu1 = " + format17(mu1) + " >= 1/3");
  if (!before.dictionary_label().empty() && !after.dictionary_label().empty() &&
      before.dictionary_label() != after.dictionary_label())
    fail(ErrorCode::dictionary_mismatch,
         "representations bound to different dictionaries");

  const double before_sum = before.power_sum(p);
  const double before_max = before.max_abs_coeff();
  const double after_max = after.max_abs_coeff();
  const double drop =
      std::pow(0.5, p) * std::pow(1.0 - 3.0 * mu1, p) * std::pow(before_max, p);

  LemmaReport r;
  r.lhs = after.power_sum(p);
  r.rhs = before_sum - drop;
  r.slack_used = 1e-12 * (1.0 + before_sum);
  r.holds = r.lhs <= r.rhs + r.slack_used;

  const bool max_ok = after_max <= before_max + 1e-12 * (1.0 + before_max);
  bool grew = false;
  for (const auto& [index, value] : after.entries())
    if (!before.contains(index)) grew = true;
  r.detail = std::string("max_inequality=") + (max_ok ? "holds" : "fails") +
             (grew ? "; support grew (hypothesis-regime exit)" : "");
  return r;
}

}  // namespace pursuit
