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

// Signature profiles of language-uniform theories: which predicates of each
// arity are nonempty and which are empty.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eclosure/index_set.hpp"

namespace ecl {

struct ArityEntry {
  IndexSet nonempty;
  IndexSet empty;

  /// Predicate symbols of this arity.
  IndexSet universe() const { return nonempty | empty; }
  bool operator==(const ArityEntry&) const = default;
};

class SignatureProfile {
 public:
  SignatureProfile() = default;
  /// Throws ValidationError when an arity's two sets overlap.
  explicit SignatureProfile(std::map<std::uint64_t, ArityEntry> arities);

  /// Canonical placement of `nonempty` and `empty` predicates for the given
  /// counts; aleph0 counts are allowed.
  static ArityEntry place(const Cardinal& nonempty, const Cardinal& empty);

  /// One "arity: NONEMPTY, EMPTY" entry per line or separated by ';'.  Each
  /// side is a count (an integer, "inf" or "aleph0") or an index set.  '#'
  /// starts a comment.
  static SignatureProfile parse(std::string_view text);

  const std::map<std::uint64_t, ArityEntry>& arities() const noexcept { return arities_; }
  /// The entry for arity n; empty sets when absent.
  ArityEntry at(std::uint64_t n) const;

  /// Every occupied arity has aleph0 nonempty and aleph0 empty predicates,
  /// and some arity is occupied.
  bool is_iilu() const;

  bool operator==(const SignatureProfile& other) const;
  std::string to_string() const;

 private:
  std::map<std::uint64_t, ArityEntry> arities_;
};

std::set<std::uint64_t> supp(const SignatureProfile& p);

/// Every predicate nonempty for p1 is nonempty for p2.  Throws
/// Error(kLanguageMismatch) when the two languages differ.
bool dominates(const SignatureProfile& p1, const SignatureProfile& p2);

/// Some arity has infinitely many predicates nonempty for p2 but not p1.
/// Throws InvalidArgument unless dominates(p1, p2).
bool infinitely_dominates(const SignatureProfile& p1, const SignatureProfile& p2);

/// Equal nonempty and empty counts at every arity.
bool language_similar(const SignatureProfile& p1, const SignatureProfile& p2);

/// Minimal strictly increasing arity schedule: r0 = k0,
/// r(n+1) = max(r(n), k(n+1)) + 1.  Throws InvalidArgument for k = 0.
std::vector<std::uint64_t> uniformize(const std::vector<std::uint64_t>& arities);

/// Copies every nonempty predicate of an occupied arity countably often and
/// adds countably many empty ones.  Throws InvalidArgument for profiles with
/// no nonempty predicate.
SignatureProfile iilu_expand(const SignatureProfile& p);

}  // namespace ecl
