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

#include "authcode/io.hpp"
#include "authcode/paper_example.hpp"

namespace authcode {
namespace {

constexpr char kPaperCode[] = R"(# systematic [9,5] code over F_5
5 9 5
1 0 0 0 0 1 2 4 0
0 1 0 0 0 2 2 3 2
0 0 1 0 0 3 1 3 4
0 0 0 1 0 4 0 0 2   # trailing comment
0 0 0 0 1 2 1 1 4
)";

TEST(ParseCode, PaperFile) {
  const LinearCode c = io::parse_code(kPaperCode);
  EXPECT_EQ(c.generator(), paper_example::code().generator());
}

TEST(ParseCode, RoundTrip) {
  const LinearCode c = paper_example::code();
  EXPECT_EQ(io::parse_code(io::format_code(c)).generator(), c.generator());
}

TEST(ParseCode, ShortRowReportsLine) {
  const std::string text = "5 3 2\n1 0 1\n0 1\n";
  try {
    io::parse_code(text, "g.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("g.txt:3:"), std::string::npos);
  }
}

TEST(ParseCode, MissingRow) {
  EXPECT_THROW(io::parse_code("5 3 2\n1 0 1\n"), ParseError);
}

TEST(ParseCode, BadTokenReportsColumn) {
  try {
    io::parse_code("5 3 1\n1 x 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseCode, Rejections) {
  EXPECT_THROW(io::parse_code("6 2 1\n1 1\n"), ParseError);
  EXPECT_THROW(io::parse_code("5 2 1\n1 5\n"), ParseError);
  EXPECT_THROW(io::parse_code("5 2 3\n1 1\n1 1\n1 1\n"), ParseError);
  EXPECT_THROW(io::parse_code("5 2 2\n1 1\n1 1\n"), ParseError);
  EXPECT_THROW(io::parse_code("5 2 1\n1 1\n1 1\n"), ParseError);
  EXPECT_THROW(io::parse_code(""), ParseError);
}

TEST(KeyFiles, RoundTrip) {
  const SchemeParams p = paper_example::params();
  const KeyMatrix a = KeyMatrix::from_matrix(paper_example::key_matrix(), p);
  const io::KeyMatrixFile af = io::parse_key_matrix(io::format_key_matrix(a));
  EXPECT_EQ(af.q, 5u);
  EXPECT_EQ(af.a, a.matrix());
  const Distribution d = distribute(a, p);
  const std::string b_text = io::format_key_file(d.b, 5);
  EXPECT_EQ(b_text.substr(0, b_text.find('\n')), "5 3 5 9");
  const io::KeyFile kf = io::parse_key_file(b_text);
  EXPECT_EQ(kf.b, paper_example::expected_b());
  EXPECT_EQ(kf.max_messages, 3u);
  EXPECT_EQ(kf.k, 5u);
  for (const PrivateKey& key : d.keys) {
    const PrivateKey back =
        io::parse_receiver_key(io::format_receiver_key(key), p.field());
    EXPECT_EQ(back.receiver, key.receiver);
    EXPECT_EQ(back.column, key.column);
  }
}

TEST(KeyFiles, Rejections) {
  EXPECT_THROW(io::parse_key_matrix("5 1 2\n1 2\n"), ParseError);
  EXPECT_THROW(io::parse_key_file("5 1 1 2\n1 2\n1 2\n1 2\n"), ParseError);
  EXPECT_THROW(io::parse_receiver_key("1\n1 9\n", make_field(5)), ParseError);
}

TEST(TaggedMessage, RoundTrip) {
  const FieldSpec f = make_field(5);
  const TaggedMessage m = io::parse_tagged_message("1 1 0 2 4 3", f, 5);
  EXPECT_EQ(m.message, 1u);
  EXPECT_EQ(m.tag, (Vector{1, 0, 2, 4, 3}));
  EXPECT_EQ(io::format_tagged_message(m), "1 1 0 2 4 3");
  EXPECT_THROW(io::parse_tagged_message("1 1 0 2 4", f, 5), ParseError);
  EXPECT_THROW(io::parse_tagged_message("7 1 0 2 4 3", f, 5), ParseError);
}

TEST(Scenario, KeyValues) {
  const auto kv = io::parse_scenario("# attack\ncode = g.txt\ncoalition=1,2,3\n\n");
  EXPECT_EQ(kv.at("code"), "g.txt");
  EXPECT_EQ(kv.at("coalition"), "1,2,3");
  EXPECT_THROW(io::parse_scenario("code g.txt\n"), ParseError);
  EXPECT_THROW(io::parse_scenario("a=1\na=2\n"), ParseError);
}

TEST(IntList, Parsing) {
  EXPECT_EQ(io::parse_int_list("1, 2,3", "x"), (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_TRUE(io::parse_int_list("", "x").empty());
  EXPECT_THROW(io::parse_int_list("1,,2", "x"), Error);
  EXPECT_THROW(io::parse_int_list("1,a", "x"), Error);
}

}  // namespace
}  // namespace authcode
