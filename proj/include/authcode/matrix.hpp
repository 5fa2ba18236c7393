// Copyright 2026 The authcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense linear algebra over F_q.
//
// Row reduction pivots deterministically (leftmost column first, topmost
// nonzero row within it), so reduced forms, nullspace bases and affine
// solution sets are reproducible bit for bit.

#ifndef AUTHCODE_MATRIX_HPP_
#define AUTHCODE_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "authcode/field.hpp"

namespace authcode {

using Vector = std::vector<Residue>;

class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  // Entries are reduced mod q; rows must have equal length.
  static Matrix from_rows(FieldSpec field,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_rows(
      FieldSpec field,
      std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_vectors(FieldSpec field, std::size_t cols,
                             const std::vector<Vector>& rows);
  static Matrix identity(FieldSpec field, std::size_t n);

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  // Stores v mod q.
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    data_[r * cols_ + c] = field_.reduce(v);
  }
  FieldElement at(std::size_t r, std::size_t c) const;

  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  std::span<const Residue> data() const { return data_; }

  Matrix transpose() const;
  // Columns listed in `cols` (0-based), in that order.
  Matrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Throws DimensionMismatch / FieldMismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& m, std::span<const Residue> x);
// x^T m for a row vector x.
Vector vec_mat(std::span<const Residue> x, const Matrix& m);
Residue dot(FieldSpec field, std::span<const Residue> a,
            std::span<const Residue> b);

struct RowEchelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // 0-based pivot columns, increasing
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column (increasing).
std::vector<Vector> nullspace(const Matrix& m);

// Affine set particular + span(basis) of all solutions of a linear system.
struct AffineSolutionSet {
  FieldSpec field;
  Vector particular;
  std::vector<Vector> basis;
  std::size_t ambient_dim = 0;

  std::size_t dimension() const noexcept { return basis.size(); }
  // q^dimension, saturating.
  std::uint64_t count() const;
  bool contains(std::span<const Residue> x) const;
  // particular + sum c_i basis_i
  Vector point(std::span<const Residue> coeffs) const;
};

// Throws DimensionMismatch, Inconsistent.
AffineSolutionSet solve_affine(const Matrix& coeff,
                               std::span<const Residue> rhs);

// All q^dim points, ordered lexicographically by coefficient vector with
// c_1 most significant. Throws CapExceeded.
std::vector<Vector> enumerate_affine(const AffineSolutionSet& s,
                                     std::uint64_t cap);

// Calls fn(coeffs, point) for each point in enumerate_affine order without
// materialising the list.
template <typename Fn>
void for_each_affine(const AffineSolutionSet& s, std::uint64_t cap, Fn&& fn);

}  // namespace authcode

#include "authcode/matrix_inl.hpp"

#endif  // AUTHCODE_MATRIX_HPP_
