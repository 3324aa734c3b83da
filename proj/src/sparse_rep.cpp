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

#include "sparse_rep.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "text_format.hpp"

namespace pursuit {

double SparseRepresentation::coeff(int index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? 0.0 : it->second;
}

void SparseRepresentation::set_coeff(int index, double value) {
  if (index < 0)
    fail(ErrorCode::index_out_of_range,
         "negative atom index " + std::to_string(index));
  if (value == 0.0)
    entries_.erase(index);
  else
    entries_[index] = value;
}

std::vector<int> SparseRepresentation::support() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [index, value] : entries_) out.push_back(index);
  return out;
}

double SparseRepresentation::max_abs_coeff() const {
  double best = 0.0;
  for (const auto& [index, value] : entries_) best = std::max(best, std::abs(value));
  return best;
}

double SparseRepresentation::power_sum(double p) const {
  double s = 0.0;
  for (const auto& [index, value] : entries_) s += std::pow(std::abs(value), p);
  return s;
}

double SparseRepresentation::one_norm() const {
  double s = 0.0;
  for (const auto& [index, value] : entries_) s += std::abs(value);
  return s;
}

std::string SparseRepresentation::to_text() const {
  std::string out;
  for (const auto& [index, value] : entries_) {
    out += std::to_string(index);
    out += ' ';
    out += format17(value);
    out += '\n';
  }
  out += '\n';
  return out;
}

SparseRepresentation SparseRepresentation::from_text(const std::string& text,
                                                     std::string dictionary_label) {
  SparseRepresentation rep(std::move(dictionary_label));
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) break;  // blank terminates
    std::istringstream fields(line);
    std::string idx_tok, val_tok, extra;
    fields >> idx_tok >> val_tok;
    if (fields >> extra)
      fail(ErrorCode::parse_error,
           "representation line " + std::to_string(line_no) + ": trailing tokens");
    const std::string where = "representation line " + std::to_string(line_no);
    long index = parse_long(idx_tok, where);
    double value = parse_double(val_tok, where);
    if (index < 0) fail(ErrorCode::parse_error, where + ": negative index");
    if (rep.contains(static_cast<int>(index)))
      fail(ErrorCode::parse_error, where + ": duplicate index " + idx_tok);
    rep.set_coeff(static_cast<int>(index), value);
  }
  return rep;
}

void SparseRepresentation::save(const std::string& path) const {
  write_file(path, to_text());
}

SparseRepresentation SparseRepresentation::load(const std::string& path,
                                                std::string dictionary_label) {
  return from_text(read_file(path), std::move(dictionary_label));
}

SparseRepresentation rep_scale(const SparseRepresentation& rep, double factor) {
  SparseRepresentation out(rep.dictionary_label());
  for (const auto& [index, value] : rep.entries()) out.set_coeff(index, factor * value);
  return out;
}

SparseRepresentation rep_add(const SparseRepresentation& a, const SparseRepresentation& b) {
  SparseRepresentation out(a.dictionary_label().empty() ? b.dictionary_label()
                                                        : a.dictionary_label());
  for (const auto& [index, value] : a.entries()) out.set_coeff(index, value);
  for (const auto& [index, value] : b.entries()) out.set_coeff(index, out.coeff(index) + value);
  return out;
}

}  // namespace pursuit
