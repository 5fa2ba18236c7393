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

// Arithmetic in a prime field F_q with q < 2^16.
//
// Bulk code (matrices, codewords) stores raw residues and calls the
// FieldSpec member functions directly; FieldElement is the checked scalar
// type for call sites that want operands tagged with their field.

#ifndef AUTHCODE_FIELD_HPP_
#define AUTHCODE_FIELD_HPP_

#include <cstdint>
#include <optional>
#include <ostream>

#include "authcode/error.hpp"

namespace authcode {

using Residue = std::uint32_t;

inline constexpr std::int64_t kMaxModulus = 1 << 16;

class FieldElement;

class FieldSpec {
 public:
  // Throws NotPrime / OutOfRange.
  static FieldSpec make(std::int64_t q);

  Residue modulus() const noexcept { return q_; }
  Residue order() const noexcept { return q_; }

  // Maps any integer (negative included) to its residue.
  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }
  bool contains(std::int64_t v) const noexcept { return v >= 0 && v < q_; }

  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  // a*b + c
  Residue fma(Residue a, Residue b, Residue c) const noexcept {
    return static_cast<Residue>(
        (static_cast<std::uint64_t>(a) * b + c) % q_);
  }
  // Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;
  // 0^0 = 1.
  Residue pow(Residue a, std::uint64_t e) const noexcept;

  FieldElement element(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(FieldSpec a, FieldSpec b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  explicit FieldSpec(Residue q) : q_(q) {}
  Residue q_;
};

FieldSpec make_field(std::int64_t q);

class FieldElement {
 public:
  FieldElement(FieldSpec field, Residue value);

  Residue value() const noexcept { return value_; }
  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a);
  friend bool operator==(FieldElement a, FieldElement b);

 private:
  FieldSpec field_;
  Residue value_;
};

FieldElement inv(FieldElement a);
FieldElement pow(FieldElement a, std::uint64_t e);

enum class FieldOp { kAdd, kSub, kMul, kNeg };

// kNeg ignores b; the binary ops require it (InvalidArgument otherwise).
FieldElement field_op(FieldOp op, FieldElement a,
                      std::optional<FieldElement> b = std::nullopt);

std::ostream& operator<<(std::ostream& os, FieldElement a);

bool is_prime(std::int64_t n);

}  // namespace authcode

#endif  // AUTHCODE_FIELD_HPP_
