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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace ecl {

/// Symbolic cardinal: a finite count, aleph-null, or the lower bound
/// max(2^omega, lambda).
///
/// The three tags are totally ordered Finite(n) < Aleph0 < AtLeastContinuum.
/// Two AtLeastContinuum values compare equal regardless of their lambda tag;
/// the tag only records which language cardinality produced the bound.
class Cardinal {
 public:
  enum class Tag { kFinite, kAleph0, kAtLeastContinuum };

  Cardinal() = default;

  static Cardinal finite(std::uint64_t n) {
    Cardinal c;
    c.tag_ = Tag::kFinite;
    c.n_ = n;
    return c;
  }
  static Cardinal aleph0() {
    Cardinal c;
    c.tag_ = Tag::kAleph0;
    return c;
  }
  static Cardinal at_least_continuum(std::string lambda = "omega") {
    Cardinal c;
    c.tag_ = Tag::kAtLeastContinuum;
    c.lambda_ = std::move(lambda);
    return c;
  }

  Tag tag() const noexcept { return tag_; }
  bool is_finite() const noexcept { return tag_ == Tag::kFinite; }
  bool is_zero() const noexcept { return is_finite() && n_ == 0; }
  /// Count for finite values; 0 otherwise.
  std::uint64_t count() const noexcept { return is_finite() ? n_ : 0; }
  const std::string& lambda() const noexcept { return lambda_; }

  std::strong_ordering operator<=>(const Cardinal& other) const noexcept;
  bool operator==(const Cardinal& other) const noexcept {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  /// Cardinal sum: finite values add, otherwise the larger summand wins.
  Cardinal operator+(const Cardinal& other) const;
  Cardinal& operator+=(const Cardinal& other) { return *this = *this + other; }

  /// "4", "aleph0", ">=max(2^omega,omega)".
  std::string to_string() const;

 private:
  Tag tag_ = Tag::kFinite;
  std::uint64_t n_ = 0;
  std::string lambda_ = "omega";
};

std::ostream& operator<<(std::ostream& os, const Cardinal& c);

/// Three-valued answer for depth-bounded checks.
enum class TriBool { kNo, kYes, kUnknown };

const char* to_string(TriBool value);

}  // namespace ecl
