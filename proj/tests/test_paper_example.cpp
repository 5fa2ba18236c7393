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

#include <algorithm>

#include "authcode/paper_example.hpp"

namespace authcode {
namespace {

TEST(PaperExample, AllComparisonsPass) {
  const paper_example::Report r = paper_example::run();
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.checks.size(), 13u);
}

TEST(PaperExample, EmbeddedTablesHaveExpectedSizes) {
  EXPECT_EQ(paper_example::table1().size(), 28u);
  EXPECT_EQ(paper_example::table2().size(), 28u);
  EXPECT_EQ(paper_example::table3().size(), 56u);
  EXPECT_EQ(paper_example::label_table().size(), 25u);
}

TEST(PaperExample, GroupListIsSupportsOfCodewordList) {
  std::vector<IndexSet> supports;
  for (const Vector& v : paper_example::table1()) {
    IndexSet s;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && j + 1 != 5) s.push_back(j + 1);
    supports.push_back(s);
  }
  std::vector<IndexSet> printed = paper_example::table2();
  std::sort(supports.begin(), supports.end());
  std::sort(printed.begin(), printed.end());
  EXPECT_EQ(supports, printed);
}

TEST(PaperExample, FiveSubsetListAdjudication) {
  const paper_example::Report r = paper_example::run();
  const auto& printed = paper_example::table3();
  // Recomputed set is a strict subset of the printed list.
  EXPECT_LT(r.table3_recomputed.size(), printed.size());
  for (const IndexSet& s : r.table3_recomputed)
    EXPECT_NE(std::find(printed.begin(), printed.end(), s), printed.end());
  // Every printed entry is either truly an adversary group or flagged.
  EXPECT_EQ(r.table3_recomputed.size() + r.table3_errata.size(), printed.size());
  for (const IndexSet& s : r.table3_errata)
    EXPECT_EQ(std::find(r.table3_recomputed.begin(), r.table3_recomputed.end(), s),
              r.table3_recomputed.end());
  const std::string text = r.render();
  EXPECT_NE(text.find("WARNING table3"), std::string::npos);
  EXPECT_NE(text.find("erratum {1,2,3,7,8}"), std::string::npos);
  EXPECT_NE(text.find("RESULT PASS"), std::string::npos);
}

}  // namespace
}  // namespace authcode
