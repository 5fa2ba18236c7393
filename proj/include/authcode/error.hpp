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

#ifndef AUTHCODE_ERROR_HPP_
#define AUTHCODE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace authcode {

enum class ErrorKind {
  kNotPrime,
  kOutOfRange,
  kFieldMismatch,
  kDivisionByZero,
  kDimensionMismatch,
  kInconsistent,
  kCapExceeded,
  kRankDeficient,
  kTrivialDual,
  kDuplicateMessages,
  kNoNonzeroEntry,
  kInvalidArgument,
  kInvalidScheme,
  kParse,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library is an Error; kind() identifies it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when an enumeration would exceed its cap. required() saturates at
// UINT64_MAX for counts that do not fit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t required, std::uint64_t cap);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

// Parse failures carry a 1-based position; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

// Throws CapExceeded unless base^exp <= cap. Returns base^exp.
std::uint64_t require_within_cap(std::uint64_t base, std::uint64_t exp,
                                 std::uint64_t cap);

}  // namespace authcode

#endif  // AUTHCODE_ERROR_HPP_
