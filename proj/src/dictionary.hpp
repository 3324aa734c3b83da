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

#include "sparse_rep.hpp"

namespace pursuit {

// mu1: max over atoms g of sum of |<g~, g>| over all other atoms g~ (the
// cumulative coherence); mu: max pairwise |<g~, g>|. The frame interval
// [1 - 2*mu1, 1 + 2*mu1] brackets the energy ratio of any finite combination.
struct CoherenceReport {
  double mu1 = 0.0;
  double mu = 0.0;
  double lower_frame = 1.0;   // 1 - 2*mu1
  double upper_frame = 1.0;   // 1 + 2*mu1
  int worst_atom = 0;         // lowest achieving index on ties
};

struct FrameBoundsResult {
  double lhs = 0.0;   // (1 - 2*mu1) * sum c^2
  double mid = 0.0;   // |sum c_nu g_nu|^2
  double rhs = 0.0;   // (1 + 2*mu1) * sum c^2
  bool holds = false;
};

// Finite collection of unit-norm atoms in R^dim, immutable once built.
// Construction normalizes columns whose norm is off by (1e-10, 1e-6),
// rejects anything worse, and rejects duplicate atoms up to sign.
// The Gram matrix and the coherence report are computed once up front,
// so sharing a Dictionary across threads needs no synchronization.
class Dictionary {
 public:
  // atoms: dim x count, one atom per column
  Dictionary(Eigen::MatrixXd atoms, std::string label);

  static Dictionary orthonormal(int dim);

  // Seeded whole-dictionary rejection sampling, up to max_attempts draws,
  // accepting the first draw whose measured mu1 is <= target_mu1. The first
  // attempt is a plain normalized-gaussian draw; when count <= dim, later
  // attempts blend the draw toward its orthonormalization with a shrinking
  // blend factor so that small targets stay reachable. count > dim cannot
  // reach any target below 1 (rank-deficient Gram forces mu1 >= 1) and
  // raises target_unreachable once attempts are exhausted.
  // orthonormalize = true returns a seeded signed coordinate permutation
  // (exactly orthonormal, mu1 == 0); requires count <= dim.
  static Dictionary incoherent(int dim, int count, double target_mu1,
                               std::uint64_t seed, int max_attempts,
                               bool orthonormalize = false);

  // Text format: "dim K" header line, then K lines of dim reals (one atom
  // per line). Values survive a save/load round trip bit-exactly.
  static Dictionary load(const std::string& path);
  void save(const std::string& path) const;
  std::string to_text() const;
  static Dictionary from_text(const std::string& text, std::string label);

  int dim() const { return static_cast<int>(atoms_.rows()); }
  int size() const { return static_cast<int>(atoms_.cols()); }
  const std::string& label() const { return label_; }
  const Eigen::MatrixXd& atoms() const { return atoms_; }
  Eigen::VectorXd atom(int index) const;
  const Eigen::MatrixXd& gram() const { return gram_; }
  const CoherenceReport& coherence() const { return coherence_; }

 private:
  Eigen::MatrixXd atoms_;
  Eigen::MatrixXd gram_;
  CoherenceReport coherence_;
  std::string label_;
};

// Lemma-1-style two-sided energy comparison for an explicit coefficient set:
// (1 - 2*mu1) * sum c^2  <=  |sum c g|^2  <=  (1 + 2*mu1) * sum c^2,
// tested with additive slack 1e-9 * sum c^2 on both sides. The lower bound
// is only informative for mu1 < 1/2 but the comparison is always evaluated.
FrameBoundsResult frame_bounds_check(const Dictionary& dict,
                                     const SparseRepresentation& coeffs);

}  // namespace pursuit
