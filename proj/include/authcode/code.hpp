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

// Linear [V,k] codes over F_q given by a generator matrix.
//
// Coordinates exposed by this header are 1-based (receiver R_i is
// coordinate i); Matrix indices stay 0-based.

#ifndef AUTHCODE_CODE_HPP_
#define AUTHCODE_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "authcode/matrix.hpp"

namespace authcode {

// Default bound on how many codewords / solutions a query may enumerate.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

// Sorted 1-based coordinate list.
using IndexSet = std::vector<std::size_t>;

struct Codeword {
  Vector vector;
  std::size_t weight = 0;
  IndexSet support;

  static Codeword from_vector(Vector v);

  friend bool operator==(const Codeword& a, const Codeword& b) {
    return a.vector == b.vector;
  }
};

std::size_t hamming_weight(std::span<const Residue> v);
IndexSet support_of(std::span<const Residue> v);

class LinearCode {
 public:
  // Throws RankDeficient if the rows are dependent or there are none.
  static LinearCode make(Matrix generator);
  static LinearCode make(std::int64_t q,
                         const std::vector<std::vector<std::int64_t>>& rows);

  FieldSpec field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }

  // Column i (1-based) of the generator: receiver R_i's public vector g_i.
  Vector column(std::size_t i) const;
  // message (length k) times G.
  Vector encode(std::span<const Residue> message) const;
  bool contains(std::span<const Residue> word) const;
  // Same row space.
  bool same_code(const LinearCode& other) const;
  bool is_mds(std::uint64_t cap = kDefaultCap) const;

 private:
  explicit LinearCode(Matrix generator) : generator_(std::move(generator)) {}
  Matrix generator_;
};

// [V, V-k] code with generator H satisfying G H^T = 0. Throws TrivialDual
// when k == V.
LinearCode dual_code(const LinearCode& c);

// Minimum nonzero weight by full enumeration. Throws CapExceeded.
std::size_t min_distance(const LinearCode& c, std::uint64_t cap = kDefaultCap);

// All q^k codewords ordered lexicographically by message vector.
std::vector<Codeword> enumerate_codewords(const LinearCode& c,
                                          std::uint64_t cap = kDefaultCap);

// Calls fn(codeword vector) for every codeword in enumerate_codewords order.
template <typename Fn>
void for_each_codeword(const LinearCode& c, std::uint64_t cap, Fn&& fn) {
  AffineSolutionSet all{c.field(), Vector(c.length(), 0), {}, c.length()};
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    const auto row = c.generator().row(r);
    all.basis.emplace_back(row.begin(), row.end());
  }
  for_each_affine(all, cap,
                  [&](std::span<const Residue>, std::span<const Residue> w) {
                    fn(w);
                  });
}

// Codewords minimal with respect to coordinate i: i-th entry exactly 1 and
// no other codeword with i-th entry 1 has a strictly smaller support.
// Ordered by weight, then support, then vector. Throws CapExceeded.
std::vector<Codeword> minimal_codewords_wrt(const LinearCode& c,
                                            std::size_t i,
                                            std::uint64_t cap = kDefaultCap);

// True if support a is a proper subset of support b.
bool strictly_contains(const IndexSet& b, const IndexSet& a);

}  // namespace authcode

#endif  // AUTHCODE_CODE_HPP_
