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

#include "authcode/paper_example.hpp"
#include "authcode/prng.hpp"
#include "authcode/scheme.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace authcode {
namespace {

using testing::corpus;
using testing::random_key;

TEST(SchemeParams, ValidatesAssumptions) {
  const SchemeParams p = paper_example::params();
  EXPECT_EQ(p.distance(), 3u);
  EXPECT_EQ(p.dual_distance(), 5u);
  EXPECT_EQ(p.receivers(), 9u);
  // d(C) = 1: a unit vector is a codeword.
  EXPECT_THROW(SchemeParams::make(LinearCode::make(3, {{1, 0, 0}, {0, 1, 1}}), 1),
               Error);
  // d(C^perp) = 1: a zero column.
  try {
    SchemeParams::make(LinearCode::make(3, {{1, 1, 0}}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidScheme);
  }
  EXPECT_THROW(SchemeParams::make(paper_example::code(), 0), Error);
  // k = V leaves no dual code.
  EXPECT_THROW(SchemeParams::make(LinearCode::make(3, {{1, 0}, {0, 1}}), 1), Error);
}

TEST(Keygen, ShapeAndRange) {
  const SchemeParams p = paper_example::params();
  const KeyMatrix a = keygen(p, 42);
  EXPECT_EQ(a.matrix().rows(), 4u);
  EXPECT_EQ(a.matrix().cols(), 5u);
  for (Residue v : a.matrix().data()) EXPECT_LT(v, 5u);
}

TEST(Keygen, Deterministic) {
  const SchemeParams p = paper_example::params();
  EXPECT_EQ(keygen(p, 7), keygen(p, 7));
  EXPECT_FALSE(keygen(p, 7) == keygen(p, 8));
}

TEST(Keygen, RowMajorDrawsFromPrng) {
  const SchemeParams p = paper_example::params();
  const KeyMatrix a = keygen(p, 99);
  Prng rng(99);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(a.matrix()(r, c), rng.uniform(5));
}

TEST(Keygen, EntriesRoughlyUniform) {
  const SchemeParams p = paper_example::params();
  std::vector<int> counts(5, 0);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const KeyMatrix a = keygen(p, seed);
    for (Residue v : a.matrix().data()) ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, 2000, 200);
}

TEST(KeyMatrix, InjectedPaperMatrix) {
  const SchemeParams p = paper_example::params();
  const KeyMatrix a = KeyMatrix::from_matrix(paper_example::key_matrix(), p);
  EXPECT_EQ(a.max_messages(), 3u);
  EXPECT_EQ(a.dimension(), 5u);
  EXPECT_THROW(KeyMatrix::from_matrix(Matrix(make_field(5), 3, 5), p), Error);
  EXPECT_THROW(KeyMatrix::from_matrix(Matrix(make_field(7), 4, 5), p), Error);
}

TEST(Distribute, PaperB) {
  const SchemeParams p = paper_example::params();
  const Distribution d =
      distribute(KeyMatrix::from_matrix(paper_example::key_matrix(), p), p);
  EXPECT_EQ(d.b, paper_example::expected_b());
  ASSERT_EQ(d.keys.size(), 9u);
  EXPECT_EQ(d.keys[0].receiver, 1u);
  EXPECT_EQ(d.keys[0].column, (Vector{3, 0, 0, 3}));
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(d.keys[i].receiver, i + 1);
    EXPECT_EQ(d.keys[i].column, d.b.column(i));
  }
}

TEST(Distribute, IdentityGeneratorCopiesKey) {
  const FieldSpec f = make_field(5);
  const Matrix a = paper_example::key_matrix();
  EXPECT_EQ(mat_mul(a, Matrix::identity(f, 5)), a);
}

TEST(Distribute, LinearInKey) {
  Prng rng(1);
  for (const auto& e : corpus()) {
    const SchemeParams p = SchemeParams::make(e.code, 2);
    const KeyMatrix a1 = random_key(p, rng), a2 = random_key(p, rng);
    const KeyMatrix sum = KeyMatrix::from_matrix(mat_add(a1.matrix(), a2.matrix()), p);
    EXPECT_EQ(distribute(sum, p).b,
              mat_add(distribute(a1, p).b, distribute(a2, p).b));
    EXPECT_EQ(distribute(a1, p).keys.size(), e.code.length());
  }
}

TEST(MakeTag, PaperRows) {
  const SchemeParams p = paper_example::params();
  const KeyMatrix a = KeyMatrix::from_matrix(paper_example::key_matrix(), p);
  EXPECT_EQ(make_tag(a, 1).tag, (Vector{1, 0, 2, 4, 3}));
  EXPECT_EQ(make_tag(a, 2).tag, (Vector{2, 3, 1, 0, 4}));
  EXPECT_EQ(make_tag(a, 3).tag, (Vector{4, 4, 4, 4, 3}));
  const auto row0 = a.matrix().row(0);
  EXPECT_EQ(make_tag(a, 0).tag, Vector(row0.begin(), row0.end()));
  EXPECT_EQ(make_tag(a, 2), make_tag(a, 2));
  EXPECT_THROW(make_tag(a, 5), Error);
}

TEST(ComputeLabel, PaperReceiverOne) {
  const FieldSpec f = make_field(5);
  const PrivateKey key{1, {3, 0, 0, 3}};
  EXPECT_EQ(compute_label(f, key, 1), 1u);
  EXPECT_EQ(compute_label(f, key, 0), 3u);
  // 3 + 3*2^3 = 27
  EXPECT_EQ(compute_label(f, key, 2), 2u);
}

TEST(ComputeLabel, TwoEvaluationOrdersAgree) {
  Prng rng(2);
  for (const auto& e : corpus()) {
    const SchemeParams p = SchemeParams::make(e.code, 3);
    const FieldSpec f = p.field();
    const KeyMatrix a = random_key(p, rng);
    const Distribution d = distribute(a, p);
    for (Residue s = 0; s < f.modulus(); ++s) {
      const Vector sa = vec_mat(message_powers(f, s, 3), a.matrix());
      const TaggedMessage msg = make_tag(a, s);
      EXPECT_EQ(msg.tag, sa);
      for (std::size_t i = 1; i <= p.receivers(); ++i) {
        const Vector g = e.code.column(i);
        EXPECT_EQ(compute_label(f, d.keys[i - 1], s), dot(f, sa, g));
        EXPECT_EQ(compute_label(f, d.keys[i - 1], s), fold_tag(f, msg.tag, g));
      }
    }
  }
}

TEST(Verify, CompletenessExhaustive) {
  // Every message at every receiver for many keys, q <= 5, M <= 3.
  Prng rng(3);
  for (const auto& e : corpus()) {
    if (e.code.field().modulus() > 5) continue;
    for (std::size_t m = 1; m <= 3; ++m) {
      const SchemeParams p = SchemeParams::make(e.code, m);
      for (int trial = 0; trial < 10; ++trial) {
        const KeyMatrix a = random_key(p, rng);
        const Distribution d = distribute(a, p);
        for (Residue s = 0; s < p.field().modulus(); ++s) {
          const TaggedMessage msg = make_tag(a, s);
          for (const PrivateKey& key : d.keys) EXPECT_TRUE(verify(p, key, msg));
        }
      }
    }
  }
}

TEST(Verify, PerturbedTagRejected) {
  const SchemeParams p = paper_example::params();
  const FieldSpec f = p.field();
  const KeyMatrix a = KeyMatrix::from_matrix(paper_example::key_matrix(), p);
  const Distribution d = distribute(a, p);
  for (Residue s = 0; s < 5; ++s) {
    const TaggedMessage honest = make_tag(a, s);
    for (std::size_t i = 1; i <= 9; ++i) {
      const Vector g = p.code().column(i);
      for (std::size_t j = 0; j < 5; ++j) {
        for (Residue delta = 1; delta < 5; ++delta) {
          TaggedMessage bad = honest;
          bad.tag[j] = f.add(bad.tag[j], delta);
          EXPECT_EQ(verify(f, d.keys[i - 1], g, bad), g[j] == 0)
              << "s=" << s << " i=" << i << " j=" << j;
        }
      }
    }
  }
}

TEST(Verify, WrongTagLengthRejected) {
  const SchemeParams p = paper_example::params();
  const KeyMatrix a = KeyMatrix::from_matrix(paper_example::key_matrix(), p);
  TaggedMessage msg = make_tag(a, 1);
  msg.tag.pop_back();
  EXPECT_FALSE(verify(p, distribute(a, p).keys[0], msg));
}

TEST(MessagePowers, IncludesConstantTerm) {
  const FieldSpec f = make_field(5);
  EXPECT_EQ(message_powers(f, 0, 3), (Vector{1, 0, 0, 0}));
  EXPECT_EQ(message_powers(f, 2, 3), (Vector{1, 2, 4, 3}));
}

}  // namespace
}  // namespace authcode
