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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eclosure/cardinal.hpp"

namespace ecl {

/// An eventually periodic subset of the naturals: an explicit prefix
/// followed by a block of bits repeated forever.  Values are normalized
/// (shortest period, then shortest prefix) so equal sets compare equal.
class IndexSet {
 public:
  IndexSet();  // empty

  static IndexSet empty() { return IndexSet(); }
  static IndexSet all() { return from(0); }
  static IndexSet of(const std::vector<std::uint64_t>& elements);
  /// {0, ..., n - 1}.
  static IndexSet range(std::uint64_t n);
  /// {i : i >= n}.
  static IndexSet from(std::uint64_t n);
  /// {i : i mod k in residues}.
  static IndexSet mod(std::uint64_t k, const std::vector<std::uint64_t>& residues);

  /// Parses "{1,2}", "mod(4:1,3)", "mod(4:1,3;8)" (only elements >= 8),
  /// "from(5)", "empty", and unions "A + B".
  static IndexSet parse(std::string_view text);

  bool contains(std::uint64_t i) const;
  bool is_empty() const;
  bool is_finite() const;
  Cardinal cardinality() const;

  IndexSet operator|(const IndexSet& o) const;
  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator-(const IndexSet& o) const;
  IndexSet complement() const;
  bool subset_of(const IndexSet& o) const;

  /// {a * i + b : i in *this}, a >= 1.
  IndexSet affine(std::uint64_t a, std::uint64_t b) const;

  /// Smallest elements, at most `limit` of them.
  std::vector<std::uint64_t> first(std::size_t limit) const;

  bool operator==(const IndexSet&) const = default;
  std::string to_string() const;

 private:
  IndexSet(std::vector<bool> prefix, std::vector<bool> period);
  void normalize();
  bool bit(std::size_t i) const;
  template <class Op>
  IndexSet combine(const IndexSet& o, Op op) const;

  std::vector<bool> prefix_;
  std::vector<bool> period_;
};

}  // namespace ecl
