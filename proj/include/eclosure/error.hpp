// Copyright 2026 The eclosure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecl {

enum class ErrorCode {
  kSyntax,
  kValidation,
  kInvalidArgument,
  kUnsupported,
  kLanguageMismatch,
};

/// Base class for every error the engine raises.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t column, const std::string& message)
      : Error(ErrorCode::kSyntax, "syntax error at column " +
                                      std::to_string(column) + ": " + message),
        column_(column) {}
  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorCode::kValidation, message) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error(ErrorCode::kInvalidArgument, message) {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& message)
      : Error(ErrorCode::kUnsupported, message) {}
};

class LanguageMismatch : public Error {
 public:
  explicit LanguageMismatch(const std::string& message)
      : Error(ErrorCode::kLanguageMismatch, message) {}
};

}  // namespace ecl
