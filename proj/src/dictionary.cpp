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

#include "dictionary.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"
#include "text_format.hpp"

namespace pursuit {

namespace {

constexpr double kUnitNormStrict = 1e-10;   // accepted as-is
constexpr double kUnitNormFixable = 1e-6;   // silently renormalized
constexpr double kDuplicateTol = 1e-12;     // max-abs difference up to sign

CoherenceReport coherence_from_gram(const Eigen::MatrixXd& gram) {
  const int count = static_cast<int>(gram.cols());
  CoherenceReport report;
  for (int j = 0; j < count; ++j) {
    double row_sum = 0.0;
    for (int i = 0; i < count; ++i) {
      if (i == j) continue;
      const double a = std::abs(gram(i, j));
      row_sum += a;
      if (a > report.mu) report.mu = a;
    }
    if (row_sum > report.mu1) {
      report.mu1 = row_sum;
      report.worst_atom = j;
    }
  }
  report.lower_frame = 1.0 - 2.0 * report.mu1;
  report.upper_frame = 1.0 + 2.0 * report.mu1;
  return report;
}

double mu1_of(const Eigen::MatrixXd& atoms) {
  return coherence_from_gram(atoms.transpose() * atoms).mu1;
}

Eigen::MatrixXd draw_gaussian_atoms(int dim, int count, SeededRng& rng) {
  Eigen::MatrixXd atoms(dim, count);
  for (int j = 0; j < count; ++j) {
    double norm2 = 0.0;
    do {
      for (int i = 0; i < dim; ++i) atoms(i, j) = rng.normal();
      norm2 = atoms.col(j).squaredNorm();
    } while (norm2 == 0.0);
    atoms.col(j) /= std::sqrt(norm2);
  }
  return atoms;
}

// modified Gram-Schmidt; columns assumed linearly independent (gaussian
// draws are, almost surely)
Eigen::MatrixXd orthonormalized(const Eigen::MatrixXd& atoms) {
  Eigen::MatrixXd q = atoms;
  for (int j = 0; j < q.cols(); ++j) {
    for (int k = 0; k < j; ++k) q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
    q.col(j).normalize();
  }
  return q;
}

}  // namespace

Dictionary::Dictionary(Eigen::MatrixXd atoms, std::string label)
    : atoms_(std::move(atoms)), label_(std::move(label)) {
  const int dim = static_cast<int>(atoms_.rows());
  const int count = static_cast<int>(atoms_.cols());
  if (dim < 1 || count < 1)
    fail(ErrorCode::invalid_argument, "dictionary needs dim >= 1 and K >= 1");

  for (int j = 0; j < count; ++j) {
    if ((atoms_.col(j).array() == 0.0).all())
      fail(ErrorCode::zero_atom, "atom " + std::to_string(j) + " is all-zero");
    const double norm = atoms_.col(j).norm();
    const double off = std::abs(norm - 1.0);
    if (off <= kUnitNormStrict) continue;
    if (off < kUnitNormFixable) {
      atoms_.col(j) /= norm;
    } else {
      fail(ErrorCode::norm_violation,
           "atom " + std::to_string(j) + " has norm " + format17(norm));
    }
  }

  gram_ = atoms_.transpose() * atoms_;

  // Gram prefilter, exact componentwise confirmation; sign flips count.
  for (int j = 0; j < count; ++j) {
    for (int i = j + 1; i < count; ++i) {
      if (std::abs(gram_(i, j)) < 1.0 - 1e-9) continue;
      const double diff = (atoms_.col(i) - atoms_.col(j)).cwiseAbs().maxCoeff();
      const double anti = (atoms_.col(i) + atoms_.col(j)).cwiseAbs().maxCoeff();
      if (diff <= kDuplicateTol || anti <= kDuplicateTol)
        fail(ErrorCode::duplicate_atom,
             "atoms " + std::to_string(j) + " and " + std::to_string(i) +
                 " coincide up to sign");
    }
  }

  coherence_ = coherence_from_gram(gram_);
}

Eigen::VectorXd Dictionary::atom(int index) const {
  if (index < 0 || index >= size())
    fail(ErrorCode::index_out_of_range, "atom index " + std::to_string(index));
  return atoms_.col(index);
}

Dictionary Dictionary::orthonormal(int dim) {
  if (dim < 1) fail(ErrorCode::invalid_argument, "dim must be >= 1");
  return Dictionary(Eigen::MatrixXd::Identity(dim, dim),
                    "orthonormal-" + std::to_string(dim));
}

Dictionary Dictionary::incoherent(int dim, int count, double target_mu1,
                                  std::uint64_t seed, int max_attempts,
                                  bool orthonormalize) {
  if (dim < 1 || count < 1)
    fail(ErrorCode::invalid_argument, "dim and count must be >= 1");
  if (!(target_mu1 > 0.0))
    fail(ErrorCode::invalid_argument, "target_mu1 must be positive");
  if (max_attempts < 1)
    fail(ErrorCode::invalid_argument, "max_attempts must be >= 1");

  const std::string label = "incoherent-" + std::to_string(dim) + "x" +
                            std::to_string(count) + "-s" + std::to_string(seed);
  SeededRng rng(seed);

  if (orthonormalize) {
    if (count > dim)
      fail(ErrorCode::target_unreachable,
           "cannot orthonormalize " + std::to_string(count) + " atoms in R^" +
               std::to_string(dim));
    std::vector<int> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < dim - 1; ++i)
      std::swap(perm[i], perm[i + rng.next_below(static_cast<std::uint64_t>(dim - i))]);
    Eigen::MatrixXd atoms = Eigen::MatrixXd::Zero(dim, count);
    for (int j = 0; j < count; ++j)
      atoms(perm[j], j) = (rng.next_u64() & 1u) ? -1.0 : 1.0;
    return Dictionary(std::move(atoms), label);
  }

  // Blend factor at which a gaussian draw mixed into an orthonormal set is
  // expected to land near target/2: pairwise inner products scale like
  // 2 * s * E|N(0, 1/dim)| and mu1 sums count-1 of them.
  const double pair_scale =
      2.0 * (count > 1 ? count - 1 : 1) * std::sqrt(2.0 / (std::numbers::pi * dim));
  const double blend_start = std::min(1.0, target_mu1 / (2.0 * pair_scale));

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Eigen::MatrixXd atoms = draw_gaussian_atoms(dim, count, rng);
    if (attempt > 0) {
      if (count > dim) continue;  // no orthonormal set to anneal toward
      const double s = blend_start * std::pow(0.5, attempt - 1);
      Eigen::MatrixXd q = orthonormalized(atoms);
      atoms = (1.0 - s) * q + s * atoms;
      for (int j = 0; j < count; ++j) atoms.col(j).normalize();
    }
    if (mu1_of(atoms) <= target_mu1) return Dictionary(std::move(atoms), label);
  }
  fail(ErrorCode::target_unreachable,
       "no draw reached mu1 <= " + format17(target_mu1) + " for " +
           std::to_string(count) + " atoms in R^" + std::to_string(dim) +
           " after " + std::to_string(max_attempts) + " attempts");
}

std::string Dictionary::to_text() const {
  std::string out = std::to_string(dim()) + " " + std::to_string(size()) + "\n";
  for (int j = 0; j < size(); ++j) {
    for (int i = 0; i < dim(); ++i) {
      if (i) out += ' ';
      out += format17(atoms_(i, j));
    }
    out += '\n';
  }
  return out;
}

Dictionary Dictionary::from_text(const std::string& text, std::string label) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header))
    fail(ErrorCode::parse_error, "dictionary text is empty");
  std::istringstream hdr(header);
  long dim = 0, count = 0;
  {
    std::string a, b, extra;
    hdr >> a >> b;
    if (hdr >> extra) fail(ErrorCode::parse_error, "dictionary header: trailing tokens");
    dim = parse_long(a, "dictionary header");
    count = parse_long(b, "dictionary header");
  }
  if (dim < 1 || count < 1)
    fail(ErrorCode::parse_error, "dictionary header: dim and K must be >= 1");
  Eigen::MatrixXd atoms(dim, count);
  std::string line;
  for (long j = 0; j < count; ++j) {
    if (!std::getline(in, line))
      fail(ErrorCode::parse_error,
           "dictionary: expected " + std::to_string(count) + " atom lines, got " +
               std::to_string(j));
    std::istringstream fields(line);
    std::string tok;
    for (long i = 0; i < dim; ++i) {
      if (!(fields >> tok))
        fail(ErrorCode::parse_error,
             "dictionary atom " + std::to_string(j) + ": expected " +
                 std::to_string(dim) + " values");
      atoms(i, j) = parse_double(tok, "dictionary atom " + std::to_string(j));
    }
    if (fields >> tok)
      fail(ErrorCode::parse_error,
           "dictionary atom " + std::to_string(j) + ": trailing tokens");
  }
  return Dictionary(std::move(atoms), std::move(label));
}

Dictionary Dictionary::load(const std::string& path) {
  return from_text(read_file(path), std::filesystem::path(path).stem().string());
}

void Dictionary::save(const std::string& path) const {
  write_file(path, to_text());
}

FrameBoundsResult frame_bounds_check(const Dictionary& dict,
                                     const SparseRepresentation& coeffs) {
  for (const auto& [index, value] : coeffs.entries())
    if (index >= dict.size())
      fail(ErrorCode::index_out_of_range,
           "coefficient index " + std::to_string(index) + " >= K = " +
               std::to_string(dict.size()));

  double energy = 0.0;
  Eigen::VectorXd combo = Eigen::VectorXd::Zero(dict.dim());
  for (const auto& [index, value] : coeffs.entries()) {
    energy += value * value;
    combo += value * dict.atoms().col(index);
  }

  const double mu1 = dict.coherence().mu1;
  FrameBoundsResult r;
  r.lhs = (1.0 - 2.0 * mu1) * energy;
  r.mid = combo.squaredNorm();
  r.rhs = (1.0 + 2.0 * mu1) * energy;
  const double slack = 1e-9 * energy;
  r.holds = (r.lhs <= r.mid + slack) && (r.mid <= r.rhs + slack);
  return r;
}

}  // namespace pursuit
