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

#include "authcode/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace authcode {

namespace {

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(FieldSpec a, FieldSpec b) {
  if (!(a == b)) {
    throw Error(ErrorKind::kFieldMismatch,
                "matrices over F_" + std::to_string(a.modulus()) +
                    " and F_" + std::to_string(b.modulus()));
  }
}

// In-place Gauss-Jordan over the first `limit_cols` columns.
std::vector<std::size_t> reduce_in_place(FieldSpec f, std::size_t rows,
                                         std::size_t cols,
                                         std::vector<Residue>& a,
                                         std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols,
                       a.begin() + r * cols);
    }
    const Residue scale = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j)
      a[r * cols + j] = f.mul(a[r * cols + j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Residue factor = a[i * cols + c];
      if (factor == 0) continue;
      const Residue neg = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = f.fma(neg, a[r * cols + j], a[i * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldSpec field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "row " + std::to_string(r + 1) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(
    FieldSpec field,
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(field, v);
}

Matrix Matrix::from_vectors(FieldSpec field, std::size_t cols,
                            const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::kDimensionMismatch, "ragged vector list");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw Error(ErrorKind::kOutOfRange, "matrix index out of range");
  return FieldElement(field_, (*this)(r, c));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix m(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_)
      throw Error(ErrorKind::kOutOfRange, "column index out of range");
    for (std::size_t r = 0; r < rows_; ++r)
      m.data_[r * cols.size() + j] = (*this)(r, cols[j]);
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cannot multiply " + dims(a) + " by " + dims(b));
  }
  const FieldSpec f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t)
        acc = (acc + static_cast<std::uint64_t>(a(i, t)) * b(t, j)) %
              f.modulus();
      out.set(i, j, static_cast<std::int64_t>(acc));
    }
  }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cannot add " + dims(a) + " and " + dims(b));
  }
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, a.field().add(a(r, c), b(r, c)));
  return out;
}

Residue dot(FieldSpec f, std::span<const Residue> a,
            std::span<const Residue> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::kDimensionMismatch, "dot product length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % f.modulus();
  return static_cast<Residue>(acc);
}

Vector mat_vec(const Matrix& m, std::span<const Residue> x) {
  if (x.size() != m.cols())
    throw Error(ErrorKind::kDimensionMismatch, "mat_vec length mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.field(), m.row(r), x);
  return out;
}

Vector vec_mat(std::span<const Residue> x, const Matrix& m) {
  if (x.size() != m.rows())
    throw Error(ErrorKind::kDimensionMismatch, "vec_mat length mismatch");
  const FieldSpec f = m.field();
  Vector out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[c] = f.fma(x[r], m(r, c), out[c]);
  }
  return out;
}

RowEchelon rref(const Matrix& m) {
  std::vector<Residue> a(m.data().begin(), m.data().end());
  auto pivots = reduce_in_place(m.field(), m.rows(), m.cols(), a, m.cols());
  Matrix reduced(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      reduced.set(r, c, a[r * m.cols() + c]);
  const std::size_t rk = pivots.size();
  return RowEchelon{std::move(reduced), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> nullspace(const Matrix& m) {
  const RowEchelon e = rref(m);
  const FieldSpec f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank; ++r)
      v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t AffineSolutionSet::count() const {
  return saturating_pow(field.modulus(), basis.size());
}

Vector AffineSolutionSet::point(std::span<const Residue> coeffs) const {
  if (coeffs.size() != basis.size())
    throw Error(ErrorKind::kDimensionMismatch, "coefficient count mismatch");
  Vector x = particular;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] = field.fma(coeffs[i], basis[i][j], x[j]);
  }
  return x;
}

bool AffineSolutionSet::contains(std::span<const Residue> x) const {
  if (x.size() != ambient_dim) return false;
  // x - particular must lie in span(basis): rank test on the stacked rows.
  Vector diff(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j)
    diff[j] = field.sub(x[j], particular[j]);
  std::vector<Vector> rows = basis;
  rows.push_back(diff);
  return rank(Matrix::from_vectors(field, ambient_dim, rows)) == basis.size();
}

AffineSolutionSet solve_affine(const Matrix& coeff,
                               std::span<const Residue> rhs) {
  if (coeff.rows() != rhs.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "system has " + std::to_string(coeff.rows()) +
                    " equations but " + std::to_string(rhs.size()) +
                    " right-hand sides");
  }
  const FieldSpec f = coeff.field();
  const std::size_t n = coeff.cols();
  const std::size_t width = n + 1;
  std::vector<Residue> aug(coeff.rows() * width);
  for (std::size_t r = 0; r < coeff.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r * width + c] = coeff(r, c);
    aug[r * width + n] = f.reduce(rhs[r]);
  }
  const auto pivots = reduce_in_place(f, coeff.rows(), width, aug, n);
  for (std::size_t r = pivots.size(); r < coeff.rows(); ++r) {
    if (aug[r * width + n] != 0)
      throw Error(ErrorKind::kInconsistent, "linear system has no solution");
  }
  AffineSolutionSet s{f, Vector(n, 0), {}, n};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    s.particular[pivots[r]] = aug[r * width + n];
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(aug[r * width + free]);
    s.basis.push_back(std::move(v));
  }
  return s;
}

std::vector<Vector> enumerate_affine(const AffineSolutionSet& s,
                                     std::uint64_t cap) {
  std::vector<Vector> out;
  for_each_affine(s, cap, [&](std::span<const Residue>,
                              std::span<const Residue> x) {
    out.emplace_back(x.begin(), x.end());
  });
  return out;
}

}  // namespace authcode
