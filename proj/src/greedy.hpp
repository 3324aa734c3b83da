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
#include <optional>
#include <string>
#include <vector>

#include "dictionary.hpp"
#include "signals.hpp"
#include "sparse_rep.hpp"

namespace pursuit {

enum class Algorithm { pga, oga };
enum class StopReason {
  max_iterations,
  residual_tolerance,
  inner_product_tolerance,
  stagnation,
};

const char* algorithm_name(Algorithm a);
const char* stop_reason_name(StopReason r);

// residual_tol: stop once |residual| <= tol. Negative means the default
// 1e-12 * |f|; exactly 0 disables the residual stop (so a zero input is
// reported through the inner-product stop, which fires non-strictly).
// inner_product_tol: stop when the best |<residual, g>| <= tol; negative
// means the default 1e-14 * |f|.
struct StopRule {
  int max_iterations = 1000;
  double residual_tol = -1.0;
  double inner_product_tol = -1.0;
};

struct StepRecord {
  int selected = -1;
  double inner_product = 0.0;      // signed <f_m, g_{m+1}>
  double residual_norm = 0.0;      // |f_{m+1}|
  std::optional<SparseRepresentation> coefficients;  // tracked / projection snapshot
};

struct GreedyTrace {
  Algorithm algorithm = Algorithm::pga;
  double initial_norm = 0.0;       // |f_0|
  StopReason stop_reason = StopReason::max_iterations;
  std::optional<SparseRepresentation> initial_coefficients;
  std::vector<StepRecord> steps;

  // |f_i|, i.e. the residual entering step i (0-based); initial_norm at 0
  double residual_norm_before(std::size_t i) const;
  double final_residual_norm() const;

  // "step,selected,inner_product,residual_norm", 17-significant-digit reals,
  // step numbered from 1
  std::string to_csv() const;
  static GreedyTrace from_csv(const std::string& csv, Algorithm algorithm,
                              double initial_norm);

  // one representation file per step: <dir>/step_00001.txt ...
  void export_coefficients(const std::string& dir) const;
};

struct Selection {
  int index = -1;
  double inner_product = 0.0;
};

// argmax over atoms of |<residual, g>|; lowest index wins within absolute
// tolerance 1e-14 * |residual|; returns the signed inner product
Selection select_atom(const Dictionary& dict, const Eigen::VectorXd& residual);

// Pure greedy algorithm: residual <- residual - <residual, g> g. When track
// is given it must synthesize to f within 1e-10 * |f|; the tracked
// representation is advanced by pga_coefficient_step each iteration, checked
// against the residual to 1e-8 * |f|, and snapshotted into the trace.
GreedyTrace run_pga(const Dictionary& dict, const Eigen::VectorXd& f,
                    const StopRule& stop,
                    const SparseRepresentation* track = nullptr);

struct Projection {
  SparseRepresentation coefficients;
  Eigen::VectorXd residual;
};

// Least-squares fit of f on the given atoms through the Gram normal
// equations, solved by an unpivoted Cholesky factorization; a pivot below
// 1e-12 raises singular_gram.
Projection project_onto_atoms(const Dictionary& dict,
                              const std::vector<int>& support,
                              const Eigen::VectorXd& f);

// Orthogonal greedy algorithm: select, extend the support, reproject. A
// selection already in the support stops the run with Stagnation.
GreedyTrace run_oga(const Dictionary& dict, const Eigen::VectorXd& f,
                    const StopRule& stop);

}  // namespace pursuit
