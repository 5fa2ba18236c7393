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

#include "authcode/field.hpp"

#include <string>

namespace authcode {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::make(std::int64_t q) {
  if (q < 2 || q >= kMaxModulus) {
    throw Error(ErrorKind::kOutOfRange,
                "field modulus " + std::to_string(q) +
                    " outside [2, 65536)");
  }
  if (!is_prime(q)) {
    throw Error(ErrorKind::kNotPrime,
                "field modulus " + std::to_string(q) + " is not prime");
  }
  return FieldSpec(static_cast<Residue>(q));
}

FieldSpec make_field(std::int64_t q) { return FieldSpec::make(q); }

Residue FieldSpec::inv(Residue a) const {
  if (a % q_ == 0) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a % q_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  return reduce(t0);
}

Residue FieldSpec::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % q_;
  Residue base = a % q_;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldElement FieldSpec::element(std::int64_t v) const {
  return FieldElement(*this, reduce(v));
}
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

FieldElement::FieldElement(FieldSpec field, Residue value)
    : field_(field), value_(value) {
  if (value >= field.modulus()) {
    throw Error(ErrorKind::kOutOfRange,
                std::to_string(value) + " is not a residue mod " +
                    std::to_string(field.modulus()));
  }
}

namespace {

FieldSpec common_field(FieldElement a, FieldElement b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorKind::kFieldMismatch,
                "operands from F_" + std::to_string(a.field().modulus()) +
                    " and F_" + std::to_string(b.field().modulus()));
  }
  return a.field();
}

}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  const FieldSpec f = common_field(a, b);
  return FieldElement(f, f.add(a.value_, b.value_));
}

FieldElement operator-(FieldElement a, FieldElement b) {
  const FieldSpec f = common_field(a, b);
  return FieldElement(f, f.sub(a.value_, b.value_));
}

FieldElement operator*(FieldElement a, FieldElement b) {
  const FieldSpec f = common_field(a, b);
  return FieldElement(f, f.mul(a.value_, b.value_));
}

FieldElement operator-(FieldElement a) {
  return FieldElement(a.field_, a.field_.neg(a.value_));
}

bool operator==(FieldElement a, FieldElement b) {
  common_field(a, b);
  return a.value_ == b.value_;
}

FieldElement inv(FieldElement a) {
  return FieldElement(a.field(), a.field().inv(a.value()));
}

FieldElement pow(FieldElement a, std::uint64_t e) {
  return FieldElement(a.field(), a.field().pow(a.value(), e));
}

FieldElement field_op(FieldOp op, FieldElement a,
                      std::optional<FieldElement> b) {
  if (op == FieldOp::kNeg) return -a;
  if (!b) throw Error(ErrorKind::kInvalidArgument, "binary op needs b");
  switch (op) {
    case FieldOp::kAdd: return a + *b;
    case FieldOp::kSub: return a - *b;
    case FieldOp::kMul: return a * *b;
    case FieldOp::kNeg: break;
  }
  return -a;
}

std::ostream& operator<<(std::ostream& os, FieldElement a) {
  return os << a.value();
}

}  // namespace authcode
