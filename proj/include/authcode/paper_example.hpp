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

// The published F_5 worked example, embedded verbatim, and a regression run
// that recomputes every value from the library and diffs it against the
// embedded copy.
//
// Scenario: systematic [9,5] code over F_5, M = 3, receivers R_1..R_3
// corrupted after seeing messages 1, 2 and 3, fresh message 4.

#ifndef AUTHCODE_PAPER_EXAMPLE_HPP_
#define AUTHCODE_PAPER_EXAMPLE_HPP_

#include <string>
#include <vector>

#include "authcode/adversary.hpp"

namespace authcode::paper_example {

inline constexpr std::int64_t kQ = 5;
inline constexpr std::size_t kMaxMessages = 3;
inline constexpr Residue kFresh = 4;
inline constexpr std::size_t kTableTarget = 5;

LinearCode code();
SchemeParams params();
// A, 4x5.
Matrix key_matrix();
// B = A G as printed, 4x9.
Matrix expected_b();
const IndexSet& coalition();
const std::vector<Residue>& observed_messages();
// The three broadcast rows "s L_1(s) ... L_5(s)".
const std::vector<std::vector<Residue>>& observed_rows();

// The printed solution family, as column-major flattened key matrices.
const Vector& printed_particular();
const std::vector<Vector>& printed_null_vectors();

// (label at R_4, ..., label at R_9) for fresh message 4, one per solution.
const std::vector<std::vector<Residue>>& label_table();

// Dual codewords minimal with respect to 5, in printed order.
const std::vector<Vector>& table1();
// Their supports without 5, in printed order.
const std::vector<IndexSet>& table2();
// The printed list of 5-receiver groups claimed unable to forge for R_5.
const std::vector<IndexSet>& table3();

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  // 5-subsets of [9] \ {5} that truly are adversary groups to R_5.
  std::vector<IndexSet> table3_recomputed;
  // Printed entries that contain a minimal substitution group.
  std::vector<IndexSet> table3_errata;

  bool passed() const;
  std::string render() const;
};

Report run(std::uint64_t cap = kDefaultCap);

}  // namespace authcode::paper_example

#endif  // AUTHCODE_PAPER_EXAMPLE_HPP_
