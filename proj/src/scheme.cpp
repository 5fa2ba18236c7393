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

#include "authcode/scheme.hpp"

#include <string>
#include <utility>

#include "authcode/prng.hpp"

namespace authcode {

SchemeParams SchemeParams::make(LinearCode code, std::size_t max_messages,
                                std::uint64_t cap) {
  if (max_messages < 1)
    throw Error(ErrorKind::kInvalidScheme, "M must be at least 1");
  const std::size_t d = min_distance(code, cap);
  if (d < 2) {
    throw Error(ErrorKind::kInvalidScheme,
                "code has minimum distance " + std::to_string(d) +
                    "; the scheme needs d(C) >= 2");
  }
  const std::size_t dd = min_distance(dual_code(code), cap);
  if (dd < 2) {
    throw Error(ErrorKind::kInvalidScheme,
                "dual code has minimum distance " + std::to_string(dd) +
                    "; the scheme needs d(C^perp) >= 2");
  }
  return SchemeParams(std::move(code), max_messages, d, dd);
}

KeyMatrix KeyMatrix::from_matrix(Matrix a, const SchemeParams& params) {
  if (!(a.field() == params.field()))
    throw Error(ErrorKind::kFieldMismatch, "key matrix over the wrong field");
  if (a.rows() != params.max_messages() + 1 || a.cols() != params.dimension()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "key matrix must be " +
                    std::to_string(params.max_messages() + 1) + "x" +
                    std::to_string(params.dimension()) + ", got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return KeyMatrix(std::move(a));
}

KeyMatrix keygen(const SchemeParams& params, std::uint64_t seed) {
  Prng rng(seed);
  const FieldSpec f = params.field();
  Matrix a(f, params.max_messages() + 1, params.dimension());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      a.set(r, c, static_cast<std::int64_t>(rng.uniform(f.modulus())));
  return KeyMatrix::from_matrix(std::move(a), params);
}

Distribution distribute(const KeyMatrix& a, const SchemeParams& params) {
  Matrix b = mat_mul(a.matrix(), params.code().generator());
  std::vector<PrivateKey> keys;
  keys.reserve(b.cols());
  for (std::size_t i = 0; i < b.cols(); ++i)
    keys.push_back(PrivateKey{i + 1, b.column(i)});
  return Distribution{std::move(b), std::move(keys)};
}

Vector message_powers(FieldSpec field, Residue s, std::size_t max_messages) {
  Vector p(max_messages + 1);
  Residue acc = 1;
  for (std::size_t t = 0; t <= max_messages; ++t) {
    p[t] = acc;
    acc = field.mul(acc, s);
  }
  return p;
}

namespace {

void require_residue(FieldSpec f, Residue s) {
  if (s >= f.modulus()) {
    throw Error(ErrorKind::kOutOfRange,
                "message " + std::to_string(s) + " is not a residue mod " +
                    std::to_string(f.modulus()));
  }
}

}  // namespace

TaggedMessage make_tag(const KeyMatrix& a, Residue s) {
  require_residue(a.field(), s);
  const Vector powers = message_powers(a.field(), s, a.max_messages());
  return TaggedMessage{s, vec_mat(powers, a.matrix())};
}

Residue compute_label(FieldSpec field, const PrivateKey& key, Residue s) {
  require_residue(field, s);
  const Vector powers = message_powers(field, s, key.column.size() - 1);
  return dot(field, powers, key.column);
}

Residue fold_tag(FieldSpec field, std::span<const Residue> tag,
                 std::span<const Residue> g_column) {
  return dot(field, tag, g_column);
}

bool verify(FieldSpec field, const PrivateKey& key,
            std::span<const Residue> g_column, const TaggedMessage& msg) {
  if (msg.tag.size() != g_column.size() || msg.message >= field.modulus())
    return false;
  return compute_label(field, key, msg.message) ==
         fold_tag(field, msg.tag, g_column);
}

bool verify(const SchemeParams& params, const PrivateKey& key,
            const TaggedMessage& msg) {
  return verify(params.field(), key, params.code().column(key.receiver), msg);
}

}  // namespace authcode
