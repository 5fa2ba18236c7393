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


#include <gtest/gtest.h>

#include <set>

#include "authcode/matrix.hpp"
#include "authcode/paper_example.hpp"
#include "authcode/prng.hpp"

namespace authcode {
namespace {

Matrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, Prng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.set(i, j, static_cast<std::int64_t>(rng.uniform(f.modulus())));
  return m;
}

// Every vector of F_q^n, in lexicographic order.
std::vector<Vector> all_vectors(FieldSpec f, std::size_t n) {
  std::vector<Vector> out{Vector(n, 0)};
  if (n == 0) return out;
  Vector v(n, 0);
  while (true) {
    std::size_t pos = n;
    while (pos > 0 && v[pos - 1] + 1 == f.modulus()) v[--pos] = 0;
    if (pos == 0) break;
    ++v[pos - 1];
    out.push_back(v);
  }
  return out;
}

TEST(MatMul, PaperKeyDistribution) {
  const Matrix b = mat_mul(paper_example::key_matrix(),
                           paper_example::code().generator());
  EXPECT_EQ(b, paper_example::expected_b());
  EXPECT_EQ(b.column(0), (Vector{3, 0, 0, 3}));
}

TEST(MatMul, IdentityAndZero) {
  const FieldSpec f = make_field(5);
  const Matrix a = paper_example::key_matrix();
  EXPECT_EQ(mat_mul(a, Matrix::identity(f, 5)), a);
  EXPECT_EQ(mat_mul(Matrix(f, 2, 4), a), Matrix(f, 2, 5));
}

TEST(MatMul, DimensionMismatch) {
  const FieldSpec f = make_field(5);
  try {
    mat_mul(Matrix(f, 2, 3), Matrix(f, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
  EXPECT_THROW(mat_mul(Matrix(f, 2, 2), Matrix(make_field(7), 2, 2)), Error);
}

TEST(MatMul, MatchesTripleLoop) {
  const FieldSpec f = make_field(7);
  Prng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = random_matrix(f, 3, 4, rng);
    const Matrix b = random_matrix(f, 4, 2, rng);
    const Matrix c = mat_mul(a, b);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        int s = 0;
        for (std::size_t t = 0; t < 4; ++t) s += a(i, t) * b(t, j);
        EXPECT_EQ(c(i, j), static_cast<Residue>(s % 7));
      }
  }
}

TEST(FromRows, ReducesAndValidates) {
  const FieldSpec f = make_field(5);
  const Matrix m = Matrix::from_rows(f, {{-1, 7}, {5, 2}});
  EXPECT_EQ(m(0, 0), 4u);
  EXPECT_EQ(m(0, 1), 2u);
  EXPECT_EQ(m(1, 0), 0u);
  EXPECT_THROW(Matrix::from_rows(f, {{1, 2}, {3}}), Error);
}

TEST(Rref, PaperGeneratorHasFullRank) {
  EXPECT_EQ(rank(paper_example::code().generator()), 5u);
}

TEST(Rref, ZeroMatrix) {
  const RowEchelon e = rref(Matrix(make_field(3), 3, 4));
  EXPECT_EQ(e.rank, 0u);
  EXPECT_TRUE(e.pivots.empty());
}

TEST(Rref, DeterministicPivots) {
  const FieldSpec f = make_field(5);
  const Matrix m = Matrix::from_rows(f, {{0, 2, 4, 0}, {0, 1, 2, 3}, {0, 0, 0, 0}});
  const RowEchelon e = rref(m);
  EXPECT_EQ(e.rank, 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(e.reduced, Matrix::from_rows(f, {{0, 1, 2, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
}

TEST(Rref, IdempotentAndStructured) {
  Prng rng(3);
  for (std::int64_t q : {2, 3, 5, 7}) {
    const FieldSpec f = make_field(q);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + rng.uniform(5), c = 1 + rng.uniform(6);
      const Matrix m = random_matrix(f, r, c, rng);
      const RowEchelon e = rref(m);
      EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
      EXPECT_EQ(e.rank, e.pivots.size());
      for (std::size_t p = 0; p < e.rank; ++p) {
        for (std::size_t i = 0; i < r; ++i)
          EXPECT_EQ(e.reduced(i, e.pivots[p]), i == p ? 1u : 0u);
        for (std::size_t j = 0; j < e.pivots[p]; ++j)
          EXPECT_EQ(e.reduced(p, j), 0u);
      }
      EXPECT_EQ(rank(m.transpose()), e.rank);
    }
  }
}

TEST(Nullspace, Examples) {
  const FieldSpec f2 = make_field(2);
  EXPECT_TRUE(nullspace(Matrix::identity(make_field(5), 4)).empty());
  EXPECT_EQ(nullspace(Matrix::from_rows(f2, {{1, 1}})),
            (std::vector<Vector>{{1, 1}}));
  EXPECT_EQ(nullspace(paper_example::code().generator()).size(), 4u);
}

TEST(Nullspace, MatchesBruteForce) {
  Prng rng(5);
  for (std::int64_t q : {2, 3}) {
    const FieldSpec f = make_field(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng.uniform(4), c = 1 + rng.uniform(4);
      const Matrix m = random_matrix(f, r, c, rng);
      const auto basis = nullspace(m);
      EXPECT_EQ(basis.size(), c - rank(m));
      if (!basis.empty())
        EXPECT_EQ(rank(Matrix::from_vectors(f, c, basis)), basis.size());
      std::size_t kernel = 0;
      for (const Vector& x : all_vectors(f, c))
        if (mat_vec(m, x) == Vector(r, 0)) ++kernel;
      std::size_t expected = 1;
      for (std::size_t j = 0; j < basis.size(); ++j) expected *= q;
      EXPECT_EQ(kernel, expected);
      for (const Vector& v : basis) EXPECT_EQ(mat_vec(m, v), Vector(r, 0));
    }
  }
}

TEST(SolveAffine, IdentitySystem) {
  const FieldSpec f = make_field(5);
  const Vector b{1, 4, 2};
  const AffineSolutionSet s = solve_affine(Matrix::identity(f, 3), b);
  EXPECT_EQ(s.particular, b);
  EXPECT_TRUE(s.basis.empty());
  EXPECT_EQ(s.count(), 1u);
}

TEST(SolveAffine, Inconsistent) {
  const FieldSpec f = make_field(3);
  try {
    solve_affine(Matrix(f, 1, 2), Vector{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistent);
  }
}

TEST(SolveAffine, RhsLengthMismatch) {
  const FieldSpec f = make_field(3);
  try {
    solve_affine(Matrix(f, 2, 2), Vector{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(SolveAffine, MatchesBruteForceOnRandomSystems) {
  Prng rng(17);
  for (std::int64_t q : {2, 3}) {
    const FieldSpec f = make_field(q);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + rng.uniform(4), c = 1 + rng.uniform(4);
      const Matrix m = random_matrix(f, r, c, rng);
      Vector rhs(r);
      for (auto& v : rhs) v = static_cast<Residue>(rng.uniform(q));
      std::set<Vector> oracle;
      for (const Vector& x : all_vectors(f, c))
        if (mat_vec(m, x) == rhs) oracle.insert(x);
      if (oracle.empty()) {
        EXPECT_THROW(solve_affine(m, rhs), Error);
        continue;
      }
      const AffineSolutionSet s = solve_affine(m, rhs);
      EXPECT_EQ(s.basis.size(), c - rank(m));
      const auto points = enumerate_affine(s, 1 << 10);
      EXPECT_EQ(std::set<Vector>(points.begin(), points.end()), oracle);
      EXPECT_EQ(points.size(), oracle.size());
      for (const Vector& x : all_vectors(f, c))
        EXPECT_EQ(s.contains(x), oracle.count(x) == 1);
    }
  }
}

TEST(EnumerateAffine, LexicographicCoefficientOrder) {
  const FieldSpec f = make_field(3);
  const AffineSolutionSet s{f, {1, 0, 0}, {{0, 1, 0}, {0, 0, 1}}, 3};
  const auto points = enumerate_affine(s, 100);
  ASSERT_EQ(points.size(), 9u);
  std::size_t n = 0;
  for (Residue c1 = 0; c1 < 3; ++c1)
    for (Residue c2 = 0; c2 < 3; ++c2) {
      EXPECT_EQ(points[n], (Vector{1, c1, c2}));
      EXPECT_EQ(points[n], s.point(Vector{c1, c2}));
      ++n;
    }
}

TEST(EnumerateAffine, EmptyBasisYieldsParticular) {
  const FieldSpec f = make_field(5);
  const AffineSolutionSet s{f, {3, 1}, {}, 2};
  EXPECT_EQ(enumerate_affine(s, 1), (std::vector<Vector>{{3, 1}}));
}

TEST(EnumerateAffine, CapExceeded) {
  const FieldSpec f = make_field(5);
  const AffineSolutionSet s{f, {0, 0}, {{1, 0}, {0, 1}}, 2};
  try {
    enumerate_affine(s, 10);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.required(), 25u);
    EXPECT_EQ(e.cap(), 10u);
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

TEST(Dot, VecMatAgreesWithTranspose) {
  const FieldSpec f = make_field(5);
  const Matrix a = paper_example::key_matrix();
  const Vector x{1, 2, 3, 4};
  EXPECT_EQ(vec_mat(x, a), mat_vec(a.transpose(), x));
  EXPECT_EQ(dot(f, Vector{1, 2}, Vector{3, 4}), 1u);
}

}  // namespace
}  // namespace authcode
