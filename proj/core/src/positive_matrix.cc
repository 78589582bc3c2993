// Copyright 2026 The posdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posdp/positive_matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "posdp/errors.h"

namespace posdp {

PositiveMatrix::PositiveMatrix(std::size_t rows, std::size_t cols,
                               std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DomainError("matrix needs at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    std::ostringstream msg;
    msg << "matrix of shape " << rows_ << "x" << cols_ << " given "
        << entries_.size() << " entries";
    throw DomainError(msg.str());
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const double v = entries_[k];
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << "entry (" << k / cols_ << ", " << k % cols_ << ") = " << v
          << " is not a finite nonnegative number";
      throw DomainError(msg.str());
    }
    // Canonicalize -0.0.
    if (v == 0.0) entries_[k] = 0.0;
  }
}

PositiveMatrix PositiveMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DomainError("matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      std::ostringstream msg;
      msg << "row " << i << " has " << rows[i].size() << " entries, expected "
          << cols;
      throw DomainError(msg.str());
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return PositiveMatrix(rows.size(), cols, std::move(entries));
}

PositiveMatrix PositiveMatrix::Identity(std::size_t n) {
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
  return PositiveMatrix(n, n, std::move(entries));
}

double PositiveMatrix::MaxEntry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

double PositiveMatrix::MinEntry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

std::vector<double> PositiveMatrix::ColumnMaxima() const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out[j] = std::max(out[j], (*this)(i, j));
    }
  }
  return out;
}

std::vector<double> PositiveMatrix::Multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw DomainError("matrix-vector size mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

void PositiveMatrix::AddColumn(std::size_t j, double scale,
                               std::span<double> out) const {
  for (std::size_t i = 0; i < rows_; ++i) out[i] += scale * (*this)(i, j);
}

std::vector<double> PositiveMatrix::WeightedColumnSums(
    std::span<const double> w) const {
  if (w.size() != rows_) throw DomainError("weight vector size mismatch");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double wi = w[i];
    if (wi == 0.0) continue;
    const std::span<const double> r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) out[j] += wi * r[j];
  }
  return out;
}

PositiveMatrix PositiveMatrix::Clipped(double cap) const {
  std::vector<double> entries = entries_;
  for (double& v : entries) v = std::min(v, cap);
  return PositiveMatrix(rows_, cols_, std::move(entries));
}

PositiveMatrix PositiveMatrix::Shifted(double shift) const {
  std::vector<double> entries = entries_;
  for (double& v : entries) v += shift;
  return PositiveMatrix(rows_, cols_, std::move(entries));
}

PositiveMatrix PositiveMatrix::WithRow(std::size_t i,
                                       std::span<const double> r) const {
  if (i >= rows_ || r.size() != cols_) {
    throw DomainError("replacement row does not fit the matrix");
  }
  std::vector<double> entries = entries_;
  std::copy(r.begin(), r.end(), entries.begin() + i * cols_);
  return PositiveMatrix(rows_, cols_, std::move(entries));
}

}  // namespace posdp
