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

// Multi-receiver authentication over a public linear code C with generator
// G (k x V):
//
//   key generation   the authority samples A in F_q^{(M+1) x k}
//   distribution     B = A G; receiver R_i keeps column i of B
//   tagging          message s is sent as [s, L(s)], L_j(s) = sum_t a_{t,j} s^t
//   verification     R_i accepts iff sum_t s^t b_{t,i} == sum_j L_j(s) g_{j,i}
//
// The left-hand side of the verification equation is R_i's label for s.

#ifndef AUTHCODE_SCHEME_HPP_
#define AUTHCODE_SCHEME_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "authcode/code.hpp"

namespace authcode {

class SchemeParams {
 public:
  // Validates M >= 1, d(C) >= 2 and d(C^perp) >= 2; both distances are
  // computed eagerly under `cap`. Throws InvalidScheme, TrivialDual,
  // CapExceeded.
  static SchemeParams make(LinearCode code, std::size_t max_messages,
                           std::uint64_t cap = kDefaultCap);

  const LinearCode& code() const noexcept { return code_; }
  FieldSpec field() const noexcept { return code_.field(); }
  std::size_t max_messages() const noexcept { return max_messages_; }
  std::size_t receivers() const noexcept { return code_.length(); }
  std::size_t dimension() const noexcept { return code_.dimension(); }
  std::size_t distance() const noexcept { return distance_; }
  std::size_t dual_distance() const noexcept { return dual_distance_; }

 private:
  SchemeParams(LinearCode code, std::size_t m, std::size_t d, std::size_t dd)
      : code_(std::move(code)), max_messages_(m), distance_(d),
        dual_distance_(dd) {}

  LinearCode code_;
  std::size_t max_messages_;
  std::size_t distance_;
  std::size_t dual_distance_;
};

// The authority's secret A, (M+1) x k; row t holds the coefficients of s^t.
class KeyMatrix {
 public:
  // Accepts an externally chosen A. Throws DimensionMismatch/FieldMismatch.
  static KeyMatrix from_matrix(Matrix a, const SchemeParams& params);

  const Matrix& matrix() const noexcept { return a_; }
  FieldSpec field() const noexcept { return a_.field(); }
  std::size_t max_messages() const noexcept { return a_.rows() - 1; }
  std::size_t dimension() const noexcept { return a_.cols(); }

  friend bool operator==(const KeyMatrix& x, const KeyMatrix& y) {
    return x.a_ == y.a_;
  }

 private:
  explicit KeyMatrix(Matrix a) : a_(std::move(a)) {}
  Matrix a_;
};

struct PrivateKey {
  std::size_t receiver = 0;  // 1-based
  Vector column;             // (b_{0,i}, ..., b_{M,i})
};

struct TaggedMessage {
  Residue message = 0;
  Vector tag;  // (L_1(s), ..., L_k(s))

  friend bool operator==(const TaggedMessage&, const TaggedMessage&) = default;
};

struct Distribution {
  Matrix b;
  std::vector<PrivateKey> keys;  // keys[i-1] belongs to R_i
};

// Entries drawn row-major, one Prng::uniform(q) call each.
KeyMatrix keygen(const SchemeParams& params, std::uint64_t seed);

Distribution distribute(const KeyMatrix& a, const SchemeParams& params);

// (1, s, ..., s^M).
Vector message_powers(FieldSpec field, Residue s, std::size_t max_messages);

// Throws OutOfRange if s is not a residue.
TaggedMessage make_tag(const KeyMatrix& a, Residue s);

Residue compute_label(FieldSpec field, const PrivateKey& key, Residue s);

// sum_j tag_j g_j; the value R_i compares its label against.
Residue fold_tag(FieldSpec field, std::span<const Residue> tag,
                 std::span<const Residue> g_column);

bool verify(FieldSpec field, const PrivateKey& key,
            std::span<const Residue> g_column, const TaggedMessage& msg);

// Convenience: verify at receiver key.receiver using params' generator.
bool verify(const SchemeParams& params, const PrivateKey& key,
            const TaggedMessage& msg);

}  // namespace authcode

#endif  // AUTHCODE_SCHEME_HPP_
