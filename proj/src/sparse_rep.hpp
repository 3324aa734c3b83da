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

#include <map>
#include <string>
#include <vector>

namespace pursuit {

// Finite linear combination over a dictionary: atom index -> coefficient.
// Canonical form: exact zeros are never stored, so support_size() is the
// number of genuinely active atoms.
class SparseRepresentation {
 public:
  SparseRepresentation() = default;
  explicit SparseRepresentation(std::string dictionary_label)
      : dictionary_label_(std::move(dictionary_label)) {}

  const std::string& dictionary_label() const { return dictionary_label_; }
  void set_dictionary_label(std::string label) { dictionary_label_ = std::move(label); }

  // 0.0 for indices outside the support
  double coeff(int index) const;

  // value == 0 erases; negative index throws index_out_of_range
  void set_coeff(int index, double value);

  bool contains(int index) const { return entries_.count(index) != 0; }
  bool empty() const { return entries_.empty(); }
  int support_size() const { return static_cast<int>(entries_.size()); }

  const std::map<int, double>& entries() const { return entries_; }
  std::vector<int> support() const;

  double max_abs_coeff() const;            // 0 for empty
  double power_sum(double p) const;        // sum of |c|^p
  double one_norm() const;                 // sum of |c|

  bool operator==(const SparseRepresentation&) const = default;

  // Plain-text exchange format: one "index coefficient" pair per line,
  // terminated by a blank line.
  std::string to_text() const;
  static SparseRepresentation from_text(const std::string& text,
                                        std::string dictionary_label = "");
  void save(const std::string& path) const;
  static SparseRepresentation load(const std::string& path,
                                   std::string dictionary_label = "");

 private:
  std::map<int, double> entries_;
  std::string dictionary_label_;
};

// entrywise arithmetic (used by property tests and tooling)
SparseRepresentation rep_scale(const SparseRepresentation& rep, double factor);
SparseRepresentation rep_add(const SparseRepresentation& a, const SparseRepresentation& b);

}  // namespace pursuit
