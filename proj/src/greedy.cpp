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

#include "greedy.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <unordered_set>

#include "errors.hpp"
#include "text_format.hpp"

namespace pursuit {

namespace {

constexpr double kTiePivotTol = 1e-14;      // select_atom tie window, relative
constexpr double kGramPivotTol = 1e-12;     // Cholesky pivot floor

void require_dim(const Dictionary& dict, const Eigen::VectorXd& v) {
  if (v.size() != dict.dim())
    fail(ErrorCode::dimension_mismatch,
         "vector length " + std::to_string(v.size()) + " != dim " +
             std::to_string(dict.dim()));
}

struct EffectiveStop {
  int max_iterations;
  double residual_tol;       // <= 0 disables
  double inner_product_tol;  // fires non-strictly
};

EffectiveStop resolve(const StopRule& stop, double f_norm) {
  if (stop.max_iterations < 1)
    fail(ErrorCode::invalid_argument, "max_iterations must be >= 1");
  EffectiveStop e;
  e.max_iterations = stop.max_iterations;
  e.residual_tol = stop.residual_tol < 0.0 ? 1e-12 * f_norm : stop.residual_tol;
  e.inner_product_tol =
      stop.inner_product_tol < 0.0 ? 1e-14 * f_norm : stop.inner_product_tol;
  return e;
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  return a == Algorithm::pga ? "PGA" : "OGA";
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::max_iterations: return "MaxIterations";
    case StopReason::residual_tolerance: return "ResidualTolerance";
    case StopReason::inner_product_tolerance: return "InnerProductTolerance";
    case StopReason::stagnation: return "Stagnation";
  }
  return "?";
}

double GreedyTrace::residual_norm_before(std::size_t i) const {
  return i == 0 ? initial_norm : steps[i - 1].residual_norm;
}

double GreedyTrace::final_residual_norm() const {
  return steps.empty() ? initial_norm : steps.back().residual_norm;
}

std::string GreedyTrace::to_csv() const {
  std::string out = "step,selected,inner_product,residual_norm\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += std::to_string(steps[i].selected);
    out += ',';
    out += format17(steps[i].inner_product);
    out += ',';
    out += format17(steps[i].residual_norm);
    out += '\n';
  }
  return out;
}

GreedyTrace GreedyTrace::from_csv(const std::string& csv, Algorithm algorithm,
                                  double initial_norm) {
  GreedyTrace trace;
  trace.algorithm = algorithm;
  trace.initial_norm = initial_norm;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "step,selected,inner_product,residual_norm")
    fail(ErrorCode::parse_error, "trace csv: bad header");
  long expected = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tok;
    StepRecord rec;
    std::getline(fields, tok, ',');
    if (parse_long(tok, "trace csv") != expected)
      fail(ErrorCode::parse_error, "trace csv: step numbers must be 1,2,...");
    std::getline(fields, tok, ',');
    rec.selected = static_cast<int>(parse_long(tok, "trace csv"));
    std::getline(fields, tok, ',');
    rec.inner_product = parse_double(tok, "trace csv");
    std::getline(fields, tok, ',');
    rec.residual_norm = parse_double(tok, "trace csv");
    trace.steps.push_back(std::move(rec));
    ++expected;
  }
  return trace;
}

void GreedyTrace::export_coefficients(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!steps[i].coefficients) continue;
    char name[32];
    std::snprintf(name, sizeof(name), "step_%05zu.txt", i + 1);
    steps[i].coefficients->save((std::filesystem::path(dir) / name).string());
  }
}

Selection select_atom(const Dictionary& dict, const Eigen::VectorXd& residual) {
  require_dim(dict, residual);
  const Eigen::VectorXd correlations = dict.atoms().transpose() * residual;
  const double best = correlations.cwiseAbs().maxCoeff();
  const double window = best - kTiePivotTol * residual.norm();
  for (int j = 0; j < correlations.size(); ++j) {
    if (std::abs(correlations(j)) >= window)
      return {j, correlations(j)};
  }
  return {0, correlations(0)};  // unreachable
}

GreedyTrace run_pga(const Dictionary& dict, const Eigen::VectorXd& f,
                    const StopRule& stop, const SparseRepresentation* track) {
  require_dim(dict, f);
  const double f_norm = f.norm();
  const EffectiveStop eff = resolve(stop, f_norm);

  GreedyTrace trace;
  trace.algorithm = Algorithm::pga;
  trace.initial_norm = f_norm;

  SparseRepresentation coeffs;
  if (track) {
    const double drift = (synthesize(dict, *track) - f).norm();
    if (drift > 1e-10 * f_norm)
      fail(ErrorCode::tracking_inconsistent,
           "tracked representation is off by " + format17(drift) +
               " before the first step");
    coeffs = *track;
    trace.initial_coefficients = coeffs;
  }

  Eigen::VectorXd residual = f;
  while (true) {
    if (eff.residual_tol > 0.0 && residual.norm() <= eff.residual_tol) {
      trace.stop_reason = StopReason::residual_tolerance;
      break;
    }
    if (static_cast<int>(trace.steps.size()) >= eff.max_iterations) {
      trace.stop_reason = StopReason::max_iterations;
      break;
    }
    const Selection pick = select_atom(dict, residual);
    if (std::abs(pick.inner_product) <= eff.inner_product_tol) {
      trace.stop_reason = StopReason::inner_product_tolerance;
      break;
    }

    residual -= pick.inner_product * dict.atoms().col(pick.index);

    StepRecord rec;
    rec.selected = pick.index;
    rec.inner_product = pick.inner_product;
    rec.residual_norm = residual.norm();
    if (track) {
      coeffs = pga_coefficient_step(coeffs, pick.index, pick.inner_product);
      const double drift = (synthesize(dict, coeffs) - residual).norm();
      if (drift > 1e-8 * f_norm)
        fail(ErrorCode::tracking_inconsistent,
             "tracked representation diverged by " + format17(drift) +
                 " at step " + std::to_string(trace.steps.size() + 1));
      rec.coefficients = coeffs;
    }
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

Projection project_onto_atoms(const Dictionary& dict,
                              const std::vector<int>& support,
                              const Eigen::VectorXd& f) {
  require_dim(dict, f);
  if (support.empty()) fail(ErrorCode::invalid_argument, "support is empty");
  const int s = static_cast<int>(support.size());
  for (int idx : support)
    if (idx < 0 || idx >= dict.size())
      fail(ErrorCode::index_out_of_range, "support index " + std::to_string(idx));

  Eigen::MatrixXd gram(s, s);
  Eigen::VectorXd rhs(s);
  for (int a = 0; a < s; ++a) {
    rhs(a) = dict.atoms().col(support[a]).dot(f);
    for (int b = 0; b < s; ++b) gram(a, b) = dict.gram()(support[a], support[b]);
  }

  // lower Cholesky with an explicit pivot floor
  Eigen::MatrixXd chol = Eigen::MatrixXd::Zero(s, s);
  for (int j = 0; j < s; ++j) {
    double d = gram(j, j);
    for (int k = 0; k < j; ++k) d -= chol(j, k) * chol(j, k);
    if (d < kGramPivotTol)
      fail(ErrorCode::singular_gram,
           "Gram pivot " + format17(d) + " at support position " + std::to_string(j));
    chol(j, j) = std::sqrt(d);
    for (int i = j + 1; i < s; ++i) {
      double v = gram(i, j);
      for (int k = 0; k < j; ++k) v -= chol(i, k) * chol(j, k);
      chol(i, j) = v / chol(j, j);
    }
  }
  Eigen::VectorXd y(s);
  for (int i = 0; i < s; ++i) {
    double v = rhs(i);
    for (int k = 0; k < i; ++k) v -= chol(i, k) * y(k);
    y(i) = v / chol(i, i);
  }
  Eigen::VectorXd c(s);
  for (int i = s - 1; i >= 0; --i) {
    double v = y(i);
    for (int k = i + 1; k < s; ++k) v -= chol(k, i) * c(k);
    c(i) = v / chol(i, i);
  }

  Projection out;
  out.coefficients.set_dictionary_label(dict.label());
  out.residual = f;
  for (int a = 0; a < s; ++a) {
    out.coefficients.set_coeff(support[a], c(a));
    out.residual -= c(a) * dict.atoms().col(support[a]);
  }
  return out;
}

GreedyTrace run_oga(const Dictionary& dict, const Eigen::VectorXd& f,
                    const StopRule& stop) {
  require_dim(dict, f);
  const double f_norm = f.norm();
  const EffectiveStop eff = resolve(stop, f_norm);

  GreedyTrace trace;
  trace.algorithm = Algorithm::oga;
  trace.initial_norm = f_norm;

  std::vector<int> support;
  std::unordered_set<int> taken;
  Eigen::VectorXd residual = f;
  while (true) {
    if (eff.residual_tol > 0.0 && residual.norm() <= eff.residual_tol) {
      trace.stop_reason = StopReason::residual_tolerance;
      break;
    }
    if (static_cast<int>(trace.steps.size()) >= eff.max_iterations) {
      trace.stop_reason = StopReason::max_iterations;
      break;
    }
    const Selection pick = select_atom(dict, residual);
    if (std::abs(pick.inner_product) <= eff.inner_product_tol) {
      trace.stop_reason = StopReason::inner_product_tolerance;
      break;
    }
    if (taken.count(pick.index)) {
      // the projection already annihilated this direction; no further
      // residual reduction is possible through it
      trace.stop_reason = StopReason::stagnation;
      break;
    }
    support.push_back(pick.index);
    taken.insert(pick.index);
    Projection proj = project_onto_atoms(dict, support, f);
    residual = std::move(proj.residual);

    StepRecord rec;
    rec.selected = pick.index;
    rec.inner_product = pick.inner_product;
    rec.residual_norm = residual.norm();
    rec.coefficients = std::move(proj.coefficients);
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace pursuit
