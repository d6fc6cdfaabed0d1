// Copyright 2026 The Sylvester Sums Authors
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

#ifndef SYLVESTER_ERRORS_HPP
#define SYLVESTER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sylvester {

enum class ErrorKind {
  InvalidField,
  FieldMismatch,
  ZeroDivisor,
  DivideByZero,
  NotCoprime,
  NonPositive,
  Empty,
  OutOfRange,
  InvalidPivot,
  PreconditionViolated,
  ConditionNotMet,
  InvalidWeight,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidPivot: return "InvalidPivot";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ConditionNotMet: return "ConditionNotMet";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text parsers; `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::ParseError, message), position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sylvester

#endif  // SYLVESTER_ERRORS_HPP
