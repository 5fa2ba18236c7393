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

// Text formats. All integers are decimal, whitespace separated; `#` starts
// a comment running to end of line; blank lines are ignored. Each record
// below is one line.
//
//   code file         q V k            then k rows of V residues (G)
//   key-matrix file   q M k            then M+1 rows of k residues (A)
//   key file          q M k V          then M+1 rows of V residues (B)
//   receiver key      i                then one row of M+1 residues
//   tagged message    s t_1 ... t_k
//   scenario file     key = value lines; keys: code, keys, key-matrix, M,
//                     seed, coalition, target, observed, fresh, cap
//                     (lists are comma separated)

#ifndef AUTHCODE_IO_HPP_
#define AUTHCODE_IO_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <span>
#include <string_view>
#include <vector>

#include "authcode/scheme.hpp"

namespace authcode::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

LinearCode parse_code(std::string_view text,
                      const std::string& source = "<code>");
std::string format_code(const LinearCode& code);

struct KeyMatrixFile {
  std::uint32_t q = 0;
  Matrix a;
};
KeyMatrixFile parse_key_matrix(std::string_view text,
                               const std::string& source = "<key-matrix>");
std::string format_key_matrix(const KeyMatrix& a);

struct KeyFile {
  std::uint32_t q = 0;
  std::size_t max_messages = 0;
  std::size_t k = 0;
  Matrix b;
};
KeyFile parse_key_file(std::string_view text,
                       const std::string& source = "<keys>");
std::string format_key_file(const Matrix& b, std::size_t k);

PrivateKey parse_receiver_key(std::string_view text, FieldSpec field,
                              const std::string& source = "<receiver-key>");
std::string format_receiver_key(const PrivateKey& key);

TaggedMessage parse_tagged_message(std::string_view line, FieldSpec field,
                                   std::size_t k,
                                   const std::string& source = "<message>");
std::string format_tagged_message(const TaggedMessage& msg);

// Raw key = value pairs; values are trimmed. Throws ParseError on lines
// without '=' and on repeated keys.
std::map<std::string, std::string> parse_scenario(
    std::string_view text, const std::string& source = "<scenario>");

// "1,2,3" -> {1,2,3}; empty string -> {}.
std::vector<std::int64_t> parse_int_list(std::string_view text,
                                         const std::string& what);

std::string format_vector(std::span<const Residue> v);

}  // namespace authcode::io

#endif  // AUTHCODE_IO_HPP_
