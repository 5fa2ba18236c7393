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

#include "authcode/field.hpp"

namespace authcode {
namespace {

TEST(MakeField, AcceptsPrimes) {
  EXPECT_EQ(make_field(5).modulus(), 5u);
  EXPECT_EQ(make_field(2).modulus(), 2u);
  EXPECT_EQ(make_field(65521).modulus(), 65521u);
}

TEST(MakeField, RejectsComposite) {
  try {
    make_field(6);
    FAIL() << "expected NotPrime";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotPrime);
  }
  EXPECT_THROW(make_field(1), Error);
  EXPECT_THROW(make_field(65535), Error);
}

TEST(MakeField, RejectsOutOfRange) {
  for (std::int64_t q : {std::int64_t{65536}, std::int64_t{65537},
                         std::int64_t{0}, std::int64_t{-7}}) {
    try {
      make_field(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kOutOfRange) << q;
    }
  }
}

TEST(IsPrime, MatchesTrialDivision) {
  for (std::int64_t n = 0; n < 2000; ++n) {
    bool oracle = n >= 2;
    for (std::int64_t d = 2; d < n && oracle; ++d) oracle = n % d != 0;
    EXPECT_EQ(is_prime(n), oracle) << n;
  }
}

TEST(FieldOp, Examples) {
  const FieldSpec f = make_field(5);
  EXPECT_EQ(field_op(FieldOp::kAdd, f.element(3), f.element(4)).value(), 2u);
  EXPECT_EQ(field_op(FieldOp::kMul, f.element(2), f.element(3)).value(), 1u);
  EXPECT_EQ(field_op(FieldOp::kNeg, f.element(0)).value(), 0u);
  EXPECT_EQ(field_op(FieldOp::kSub, f.element(1), f.element(3)).value(), 3u);
  EXPECT_EQ(make_field(7).neg(0), 0u);
}

TEST(FieldOp, MissingOperandThrows) {
  const FieldSpec f = make_field(5);
  EXPECT_THROW(field_op(FieldOp::kAdd, f.element(1)), Error);
}

TEST(FieldOp, MismatchedFieldsThrow) {
  const FieldElement a = make_field(5).element(1);
  const FieldElement b = make_field(7).element(1);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFieldMismatch);
  }
  EXPECT_THROW((void)(a * b), Error);
  EXPECT_THROW((void)(a - b), Error);
  EXPECT_THROW(field_op(FieldOp::kMul, a, b), Error);
}

TEST(FieldElement, RejectsNonResidue) {
  const FieldSpec f = make_field(5);
  EXPECT_THROW(FieldElement(f, 5), Error);
  EXPECT_THROW(FieldElement(f, 9), Error);
  // element() reduces first.
  EXPECT_EQ(f.element(7).value(), 2u);
  EXPECT_EQ(f.element(-1).value(), 4u);
}

TEST(Inverse, Examples) {
  const FieldSpec f = make_field(5);
  EXPECT_EQ(inv(f.element(2)).value(), 3u);
  EXPECT_EQ(inv(f.element(1)).value(), 1u);
  EXPECT_EQ(inv(f.element(4)).value(), 4u);
  EXPECT_EQ(make_field(65521).inv(1), 1u);
}

TEST(Inverse, ZeroThrows) {
  try {
    inv(make_field(5).zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivisionByZero);
  }
}

TEST(Pow, Examples) {
  const FieldSpec f = make_field(5);
  EXPECT_EQ(pow(f.element(2), 3).value(), 3u);
  EXPECT_EQ(pow(f.element(0), 0).value(), 1u);
  EXPECT_EQ(pow(f.element(4), 2).value(), 1u);
  EXPECT_EQ(f.pow(0, 3), 0u);
}

TEST(Reduce, NegativeValues) {
  const FieldSpec f = make_field(7);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.reduce(-14), 0u);
  EXPECT_EQ(f.reduce(15), 1u);
}

class FieldLaws : public ::testing::TestWithParam<int> {};

TEST_P(FieldLaws, ExhaustiveAgainstIntegerArithmetic) {
  const int q = GetParam();
  const FieldSpec f = make_field(q);
  for (int a = 0; a < q; ++a) {
    const FieldElement x = f.element(a);
    EXPECT_EQ((-x).value(), static_cast<Residue>((q - a) % q));
    for (int b = 0; b < q; ++b) {
      const FieldElement y = f.element(b);
      EXPECT_EQ((x + y).value(), static_cast<Residue>((a + b) % q));
      EXPECT_EQ((x - y).value(), static_cast<Residue>((a - b + q) % q));
      EXPECT_EQ((x * y).value(), static_cast<Residue>((a * b) % q));
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      for (int c = 0; c < q; ++c) {
        const FieldElement z = f.element(c);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(f.fma(a, b, c), static_cast<Residue>((a * b + c) % q));
      }
    }
  }
}

TEST_P(FieldLaws, InverseAndFermat) {
  const int q = GetParam();
  const FieldSpec f = make_field(q);
  for (int a = 1; a < q; ++a) {
    const FieldElement x = f.element(a);
    EXPECT_EQ((x * inv(x)).value(), 1u);
    EXPECT_EQ(inv(inv(x)), x);
    EXPECT_EQ(pow(x, q - 1).value(), 1u);
    Residue acc = 1;
    for (int e = 0; e < 2 * q; ++e) {
      EXPECT_EQ(f.pow(a, e), acc);
      acc = static_cast<Residue>(acc * a % q);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, FieldLaws, ::testing::Values(2, 3, 5, 7));

TEST(LargeField, InverseRoundTrip) {
  const FieldSpec f = make_field(65521);
  for (Residue a = 1; a < 65521; a += 97) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.mul(65520, 65520), 1u);
}

}  // namespace
}  // namespace authcode
