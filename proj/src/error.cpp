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

#include "authcode/error.hpp"

#include <limits>
#include <utility>

namespace authcode {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kFieldMismatch: return "FieldMismatch";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kInconsistent: return "Inconsistent";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kTrivialDual: return "TrivialDual";
    case ErrorKind::kDuplicateMessages: return "DuplicateMessages";
    case ErrorKind::kNoNonzeroEntry: return "NoNonzeroEntry";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInvalidScheme: return "InvalidScheme";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

CapExceeded::CapExceeded(std::uint64_t required, std::uint64_t cap)
    : Error(ErrorKind::kCapExceeded,
            "enumeration needs " +
                (required == std::numeric_limits<std::uint64_t>::max()
                     ? std::string("more than 2^64")
                     : std::to_string(required)) +
                " items, cap is " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

ParseError::ParseError(std::string source, std::size_t line,
                       std::size_t column, const std::string& message)
    : Error(ErrorKind::kParse,
            std::move(source) + ":" + std::to_string(line) +
                (column ? ":" + std::to_string(column) : std::string()) +
                ": " + message),
      line_(line),
      column_(column) {}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

std::uint64_t require_within_cap(std::uint64_t base, std::uint64_t exp,
                                 std::uint64_t cap) {
  const std::uint64_t n = saturating_pow(base, exp);
  if (n > cap) throw CapExceeded(n, cap);
  return n;
}

}  // namespace authcode
