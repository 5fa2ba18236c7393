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

// Coalition attacks on the scheme.
//
// A coalition of receivers pools its private key columns and the tagged
// messages it has seen. Everything it knows about the secret A is linear:
//
//   S A = L          (one row (1, s, ..., s^M) per observed message)
//   A g_i = b_i      (one block per coalition member)
//
// With A flattened column by column, (a_{0,1}, ..., a_{M,1}, a_{0,2}, ...,
// a_{M,k}), this becomes a single system whose solution set is every key
// matrix the coalition cannot rule out. The label a target would compute
// for a fresh message is a linear function on that set, so its
// distribution over the set is either uniform on F_q or a single value;
// only the latter lets the coalition forge.

#ifndef AUTHCODE_ADVERSARY_HPP_
#define AUTHCODE_ADVERSARY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>
#include <utility>

#include "authcode/scheme.hpp"

namespace authcode {

class CoalitionView {
 public:
  // Validates: coalition indices distinct and in 1..V; keys[j] belongs to
  // coalition[j]; observed messages pairwise distinct (DuplicateMessages);
  // tag lengths equal k. An empty observation list models impersonation.
  static CoalitionView make(SchemeParams params, IndexSet coalition,
                            std::vector<TaggedMessage> observed,
                            std::vector<PrivateKey> keys);

  // Builds the view an honest run would hand the coalition: the true keys
  // of its members and the honest tags of `messages` under `truth`.
  static CoalitionView observe(SchemeParams params, const KeyMatrix& truth,
                               IndexSet coalition,
                               const std::vector<Residue>& messages);

  const SchemeParams& params() const noexcept { return params_; }
  const IndexSet& coalition() const noexcept { return coalition_; }
  const std::vector<TaggedMessage>& observed() const noexcept {
    return observed_;
  }
  const std::vector<PrivateKey>& keys() const noexcept { return keys_; }
  bool contains_receiver(std::size_t i) const;
  bool observed_message(Residue s) const;
  // M' == M: the knowledge level the security claims are stated for.
  bool has_maximal_observations() const noexcept {
    return observed_.size() == params_.max_messages();
  }

 private:
  CoalitionView(SchemeParams params, IndexSet coalition,
                std::vector<TaggedMessage> observed,
                std::vector<PrivateKey> keys)
      : params_(std::move(params)),
        coalition_(std::move(coalition)),
        observed_(std::move(observed)),
        keys_(std::move(keys)) {}

  SchemeParams params_;
  IndexSet coalition_;
  std::vector<TaggedMessage> observed_;
  std::vector<PrivateKey> keys_;
};

struct LinearSystem {
  Matrix coeff;
  Vector rhs;
};

// k*M' evaluation rows (block-diagonal copies of S, one per key column)
// followed by K*(M+1) rows of g_{j,i}-scaled identity blocks.
LinearSystem assemble_system(const CoalitionView& view);

// Column-major flattening of A and its inverse.
Vector flatten_key(const Matrix& a);
Matrix unflatten_key(FieldSpec field, std::span<const Residue> x,
                     std::size_t max_messages, std::size_t k);

// dim span{g_i : i in coalition}.
std::size_t coalition_rank(const LinearCode& code, const IndexSet& coalition);

// Every key matrix consistent with the view, as an affine set over the
// flattened unknowns. Throws Inconsistent (tampered view) or CapExceeded
// when the set is larger than `cap`.
AffineSolutionSet solve_key_space(const CoalitionView& view,
                                  std::uint64_t cap = kDefaultCap);

struct LabelDistribution {
  std::size_t target = 0;
  Residue fresh = 0;
  std::vector<std::uint64_t> counts;  // counts[y] = #{A : label(A) = y}
  std::uint64_t total = 0;            // size of the key space

  // Every label equally likely (total / q each).
  bool is_uniform() const;
  // The single attainable label, if there is exactly one.
  std::optional<Residue> point_mass() const;
  std::vector<Residue> support() const;
};

// Label of `target` for message `fresh`, tallied over every consistent key
// matrix. Throws InvalidArgument if target is in the coalition or fresh was
// observed, plus solve_key_space's errors.
LabelDistribution label_distribution(const CoalitionView& view,
                                     std::size_t target, Residue fresh,
                                     std::uint64_t cap = kDefaultCap);

// Tag v with sum_j v_j g_j = label: zero except at the first j with
// g_j != 0. Throws NoNonzeroEntry for a zero column.
TaggedMessage tag_for_label(FieldSpec field, std::span<const Residue> g_column,
                            Residue fresh, Residue label);

struct ForgeOutcome {
  LabelDistribution distribution;
  std::optional<TaggedMessage> forged;  // set when the label is determined
  std::vector<Residue> candidates;      // attainable labels otherwise

  bool ambiguous() const noexcept { return !forged.has_value(); }
};

ForgeOutcome forge(const CoalitionView& view, std::size_t target,
                   Residue fresh, std::uint64_t cap = kDefaultCap);

}  // namespace authcode

#endif  // AUTHCODE_ADVERSARY_HPP_
