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


// Exhaustive oracles shared by the unit and acceptance tests. They work
// straight from the definitions, without the library's solvers.

#ifndef AUTHCODE_TESTS_SUPPORT_ORACLES_HPP_
#define AUTHCODE_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "authcode/adversary.hpp"
#include "authcode/prng.hpp"

namespace authcode::testing {

// A random k x V generator over F_q meeting the scheme assumptions, or
// nullopt if the draw fails them.
std::optional<LinearCode> random_scheme_code(Prng& rng, std::int64_t q,
                                             std::size_t k, std::size_t v);

// Draws until random_scheme_code succeeds.
LinearCode draw_scheme_code(Prng& rng, std::int64_t q, std::size_t k,
                            std::size_t v);

KeyMatrix random_key(const SchemeParams& p, Prng& rng);

// Every (M+1) x k matrix over F_q consistent with the view, flattened
// column-major, found by testing all q^{k(M+1)} candidates.
std::set<Vector> brute_force_key_space(const CoalitionView& view);

// Label counts for `target` at `fresh` over brute_force_key_space.
std::vector<std::uint64_t> brute_force_label_counts(const CoalitionView& view,
                                                    std::size_t target,
                                                    Residue fresh);

// `count` distinct residues drawn from [0, q) excluding `avoid`.
std::vector<Residue> distinct_messages(Prng& rng, Residue q, std::size_t count,
                                       std::optional<Residue> avoid = {});

// Every subset of [V] \ {i} as a sorted 1-based index set.
std::vector<IndexSet> subsets_without(std::size_t v, std::size_t i);

}  // namespace authcode::testing

#endif  // AUTHCODE_TESTS_SUPPORT_ORACLES_HPP_
