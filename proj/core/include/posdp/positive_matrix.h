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

#ifndef POSDP_POSITIVE_MATRIX_H_
#define POSDP_POSITIVE_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace posdp {

// Dense row-major matrix with finite nonnegative entries and at least one row
// and one column.
class PositiveMatrix {
 public:
  // Throws DomainError if entries.size() != rows * cols, a dimension is zero,
  // or an entry is negative or non-finite.
  PositiveMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static PositiveMatrix FromRows(const std::vector<std::vector<double>>& rows);
  static PositiveMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }
  const std::vector<double>& entries() const { return entries_; }

  double MaxEntry() const;
  double MinEntry() const;
  std::vector<double> ColumnMaxima() const;

  // A x.
  std::vector<double> Multiply(std::span<const double> x) const;
  // out += scale * A e_j.
  void AddColumn(std::size_t j, double scale, std::span<double> out) const;
  // w^T A, i.e. <w, A e_j> for every column j.
  std::vector<double> WeightedColumnSums(std::span<const double> w) const;

  // min{A_ij, cap} entrywise.
  PositiveMatrix Clipped(double cap) const;
  // A_ij + shift entrywise.
  PositiveMatrix Shifted(double shift) const;
  // Copy with `row` replaced.
  PositiveMatrix WithRow(std::size_t i, std::span<const double> row) const;

  friend bool operator==(const PositiveMatrix&, const PositiveMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

}  // namespace posdp

#endif  // POSDP_POSITIVE_MATRIX_H_
