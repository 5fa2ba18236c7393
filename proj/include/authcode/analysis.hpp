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

// Which coalitions can forge for a given receiver.
//
// A coalition B (not containing i) is a substitution group to R_i when it
// can pin down R_i's label for a fresh message, and an adversary group
// otherwise. The ground-truth test is whether g_i lies in span{g_j : j in
// B}. Equivalent characterisations, each computed independently here:
//
//   * some dual codeword has c_i = 1 and vanishes outside B + {i};
//   * no codeword of C has c_i = 1 and vanishes on B.
//
// Inclusion-minimal substitution groups are the supports (minus i) of the
// dual codewords minimal with respect to i.
//
// Subset scans are exhaustive and bounded by a subset cap: 2^(V-1) subsets
// per receiver must not exceed it. Results list subsets by size, then
// lexicographically.

#ifndef AUTHCODE_ANALYSIS_HPP_
#define AUTHCODE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "authcode/code.hpp"

namespace authcode {

// 2^15 subsets: exhaustive scans for V <= 16.
inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 15;

enum class Verdict { kSubstitution, kAdversary };

std::string_view to_string(Verdict v);

struct GroupClassification {
  std::size_t target = 0;
  IndexSet group;
  Verdict verdict = Verdict::kAdversary;
  // Substitution: a dual codeword with witness[target] == 1 supported on
  // group + {target}. Adversary: a codeword of C with witness[target] == 1
  // vanishing on group.
  Vector witness;

  bool is_substitution() const noexcept {
    return verdict == Verdict::kSubstitution;
  }
};

// g_target in span{g_j : j in group}.
bool spans_target(const LinearCode& code, const IndexSet& group,
                  std::size_t target);

// Throws InvalidArgument if target is in group.
GroupClassification is_substitution_group(const LinearCode& code,
                                          const IndexSet& group,
                                          std::size_t target);

struct Disagreement {
  IndexSet group;
  bool span_test = false;          // g_i in span(G_B)
  bool dual_codeword = false;      // dual codeword, c_i = 1, support in B+{i}
  bool no_primal_codeword = false; // no c in C with c_i = 1, c_B = 0
  bool primal_solvable = false;    // m G has 1 at i and 0 on B (solve)
};

struct EquivalenceReport {
  std::size_t target = 0;
  std::uint64_t subsets_checked = 0;
  std::uint64_t substitution_groups = 0;
  bool sampled = false;
  std::vector<Disagreement> disagreements;

  bool consistent() const noexcept { return disagreements.empty(); }
};

// Runs all four tests on every subset of [V] \ {i}. Codeword enumeration
// (q^k and q^(V-k) words) is bounded by `cap`.
EquivalenceReport equivalence_check(const LinearCode& code, std::size_t i,
                                    std::uint64_t cap = kDefaultCap,
                                    std::uint64_t subset_cap =
                                        kDefaultSubsetCap);

// Same tests on `samples` random subsets drawn with Prng(seed).
EquivalenceReport equivalence_check_sampled(const LinearCode& code,
                                            std::size_t i,
                                            std::uint64_t samples,
                                            std::uint64_t seed,
                                            std::uint64_t cap = kDefaultCap);

// Supports minus {i} of the dual codewords minimal with respect to i,
// deduplicated and ordered. When 2^(V-1) <= subset_cap the result is
// also checked against brute_force_minimal_substitution_groups and a
// mismatch raises Internal.
std::vector<IndexSet> minimal_substitution_groups(
    const LinearCode& code, std::size_t i, std::uint64_t cap = kDefaultCap,
    std::uint64_t subset_cap = kDefaultSubsetCap);

// Inclusion-minimal subsets passing spans_target, by exhaustive scan.
std::vector<IndexSet> brute_force_minimal_substitution_groups(
    const LinearCode& code, std::size_t i,
    std::uint64_t subset_cap = kDefaultSubsetCap);

// All subsets of [V] \ {i} of the given size with the requested verdict.
std::vector<IndexSet> groups_of_size(const LinearCode& code, std::size_t i,
                                     std::size_t size, Verdict verdict,
                                     std::uint64_t subset_cap =
                                         kDefaultSubsetCap);

// B + {i} contains the support of no dual codeword minimal w.r.t. i.
bool avoids_minimal_supports(const std::vector<Codeword>& minimal,
                             const IndexSet& group, std::size_t i);

// t: largest size at which every subset is an adversary group.
// r: smallest size at which every subset is a substitution group, or V when
//    no size qualifies (only possible when d(C) = 1).
struct ReceiverThresholds {
  std::size_t receiver = 0;
  int t = 0;
  int r = 0;
};

ReceiverThresholds receiver_thresholds(const LinearCode& code, std::size_t i,
                                       std::uint64_t subset_cap =
                                           kDefaultSubsetCap);

// Sampled mode for codes too long to scan: a sampled substitution group of
// size s shows t <= s - 1 and a sampled adversary group of size a shows
// r >= a + 1. Bounds only, never exact.
struct ThresholdEstimate {
  std::size_t receiver = 0;
  int t_upper = 0;
  int r_lower = 0;
  std::uint64_t samples = 0;
};

ThresholdEstimate estimate_thresholds(const LinearCode& code, std::size_t i,
                                      std::uint64_t samples,
                                      std::uint64_t seed);

struct AuditItem {
  std::string name;
  std::string statement;
  bool holds = false;
  bool asserted = true;  // false: informational only
  std::string detail;
};

struct SecurityReport {
  std::uint32_t q = 0;
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::size_t distance = 0;
  std::size_t dual_distance = 0;
  bool mds = false;
  bool scheme_assumptions = false;  // d >= 2 and d_dual >= 2
  std::vector<ReceiverThresholds> thresholds;
  int min_t = 0;
  int min_r = 0;
  int max_r = 0;
  std::vector<AuditItem> audits;

  // Every asserted audit holds.
  bool passed() const;
};

// Distances, every t_i and r_i, and the bound audits on them.
SecurityReport security_report(const LinearCode& code,
                               std::uint64_t cap = kDefaultCap,
                               std::uint64_t subset_cap = kDefaultSubsetCap);

// Human-readable report.
std::string render_text(const SecurityReport& report);

// One `key=value` per line:
//   q, V, k, d, d_dual, mds, scheme_assumptions, min_t, min_r, max_r,
//   t.<i>, r.<i> for each receiver, audit.<name>=pass|fail|info-true|
//   info-false, and passed=true|false last.
std::string render_kv(const SecurityReport& report);

// Subset ordering used for every list above.
bool subset_less(const IndexSet& a, const IndexSet& b);

}  // namespace authcode

#endif  // AUTHCODE_ANALYSIS_HPP_
