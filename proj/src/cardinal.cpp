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

#include "eclosure/cardinal.hpp"

namespace ecl {

std::strong_ordering Cardinal::operator<=>(const Cardinal& other) const noexcept {
  if (tag_ != other.tag_) {
    return static_cast<int>(tag_) <=> static_cast<int>(other.tag_);
  }
  if (tag_ == Tag::kFinite) return n_ <=> other.n_;
  return std::strong_ordering::equal;
}

Cardinal Cardinal::operator+(const Cardinal& other) const {
  if (is_finite() && other.is_finite()) return finite(n_ + other.n_);
  return *this < other ? other : *this;
}

std::string Cardinal::to_string() const {
  switch (tag_) {
    case Tag::kFinite:
      return std::to_string(n_);
    case Tag::kAleph0:
      return "aleph0";
    case Tag::kAtLeastContinuum:
      return ">=max(2^omega," + lambda_ + ")";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Cardinal& c) {
  return os << c.to_string();
}

const char* to_string(TriBool value) {
  switch (value) {
    case TriBool::kNo:
      return "no";
    case TriBool::kYes:
      return "yes";
    case TriBool::kUnknown:
      return "unknown";
  }
  return "?";
}

}  // namespace ecl
