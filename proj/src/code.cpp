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

#include "authcode/code.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

namespace authcode {

std::size_t hamming_weight(std::span<const Residue> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](Residue x) { return x != 0; }));
}

IndexSet support_of(std::span<const Residue> v) {
  IndexSet s;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) s.push_back(j + 1);
  return s;
}

Codeword Codeword::from_vector(Vector v) {
  Codeword c;
  c.support = support_of(v);
  c.weight = c.support.size();
  c.vector = std::move(v);
  return c;
}

bool strictly_contains(const IndexSet& b, const IndexSet& a) {
  return a.size() < b.size() &&
         std::includes(b.begin(), b.end(), a.begin(), a.end());
}

LinearCode LinearCode::make(Matrix generator) {
  if (generator.rows() == 0 || generator.cols() == 0)
    throw Error(ErrorKind::kRankDeficient, "generator matrix is empty");
  const std::size_t rk = rank(generator);
  if (rk != generator.rows()) {
    throw Error(ErrorKind::kRankDeficient,
                "generator has " + std::to_string(generator.rows()) +
                    " rows but rank " + std::to_string(rk));
  }
  return LinearCode(std::move(generator));
}

LinearCode LinearCode::make(std::int64_t q,
                            const std::vector<std::vector<std::int64_t>>& rows) {
  return make(Matrix::from_rows(make_field(q), rows));
}

Vector LinearCode::column(std::size_t i) const {
  if (i < 1 || i > length()) {
    throw Error(ErrorKind::kOutOfRange,
                "coordinate " + std::to_string(i) + " outside 1.." +
                    std::to_string(length()));
  }
  return generator_.column(i - 1);
}

Vector LinearCode::encode(std::span<const Residue> message) const {
  return vec_mat(message, generator_);
}

bool LinearCode::contains(std::span<const Residue> word) const {
  if (word.size() != length()) return false;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < dimension(); ++r) {
    const auto row = generator_.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  rows.emplace_back(word.begin(), word.end());
  return rank(Matrix::from_vectors(field(), length(), rows)) == dimension();
}

bool LinearCode::same_code(const LinearCode& other) const {
  if (!(field() == other.field()) || length() != other.length() ||
      dimension() != other.dimension())
    return false;
  for (std::size_t r = 0; r < other.dimension(); ++r)
    if (!contains(other.generator().row(r))) return false;
  return true;
}

bool LinearCode::is_mds(std::uint64_t cap) const {
  return min_distance(*this, cap) == length() - dimension() + 1;
}

LinearCode dual_code(const LinearCode& c) {
  if (c.dimension() == c.length()) {
    throw Error(ErrorKind::kTrivialDual,
                "dual of a [" + std::to_string(c.length()) + "," +
                    std::to_string(c.dimension()) + "] code is {0}");
  }
  const auto basis = nullspace(c.generator());
  return LinearCode::make(
      Matrix::from_vectors(c.field(), c.length(), basis));
}

std::vector<Codeword> enumerate_codewords(const LinearCode& c,
                                          std::uint64_t cap) {
  std::vector<Codeword> out;
  for_each_codeword(c, cap, [&](std::span<const Residue> w) {
    out.push_back(Codeword::from_vector(Vector(w.begin(), w.end())));
  });
  return out;
}

std::size_t min_distance(const LinearCode& c, std::uint64_t cap) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_codeword(c, cap, [&](std::span<const Residue> w) {
    const std::size_t wt = hamming_weight(w);
    if (wt != 0) best = std::min(best, wt);
  });
  return best;
}

std::vector<Codeword> minimal_codewords_wrt(const LinearCode& c,
                                            std::size_t i,
                                            std::uint64_t cap) {
  if (i < 1 || i > c.length()) {
    throw Error(ErrorKind::kOutOfRange,
                "coordinate " + std::to_string(i) + " outside 1.." +
                    std::to_string(c.length()));
  }
  std::vector<Codeword> candidates;
  for_each_codeword(c, cap, [&](std::span<const Residue> w) {
    if (w[i - 1] == 1)
      candidates.push_back(Codeword::from_vector(Vector(w.begin(), w.end())));
  });
  std::vector<Codeword> minimal;
  for (const Codeword& x : candidates) {
    const bool dominated = std::any_of(
        candidates.begin(), candidates.end(), [&](const Codeword& y) {
          return strictly_contains(x.support, y.support);
        });
    if (!dominated) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Codeword& a, const Codeword& b) {
              return std::tie(a.weight, a.support, a.vector) <
                     std::tie(b.weight, b.support, b.vector);
            });
  return minimal;
}

}  // namespace authcode
