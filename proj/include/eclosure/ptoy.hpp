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

// P-closures on the family of finite structures of the empty language, one
// of each cardinality 1, 2, ..., plus an infinite one (omega).

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "eclosure/index_set.hpp"

namespace ecl {

/// A subset of I = {1, 2, ...} together with omega.
class CardFamily {
 public:
  static constexpr std::uint64_t kOmega = std::numeric_limits<std::uint64_t>::max();

  CardFamily() = default;
  /// Throws InvalidArgument if `finite_part` contains 0.
  CardFamily(IndexSet finite_part, bool has_omega);

  static CardFamily empty() { return {}; }
  static CardFamily whole() { return CardFamily(IndexSet::from(1), true); }
  static CardFamily singleton(std::uint64_t i);

  /// "I", "empty", or an index-set expression optionally followed by
  /// "+ omega", e.g. "{3,5}", "mod(2:0;2) + omega".
  static CardFamily parse(std::string_view text);

  const IndexSet& finite_part() const noexcept { return finite_; }
  bool has_omega() const noexcept { return omega_; }
  bool contains(std::uint64_t i) const;
  bool is_empty() const { return finite_.is_empty() && !omega_; }
  bool is_finite() const { return finite_.is_finite(); }
  bool is_cofinite() const;

  CardFamily operator|(const CardFamily& o) const;
  CardFamily operator&(const CardFamily& o) const;
  /// I minus this set.
  CardFamily complement() const;
  bool subset_of(const CardFamily& o) const;

  bool operator==(const CardFamily&) const = default;
  std::string to_string() const;

 private:
  IndexSet finite_;
  bool omega_ = false;
};

/// Finite sets are closed; every infinite set generates I.
CardFamily cl_p(const CardFamily& s);
/// Every nonempty set generates I.
CardFamily cl_p_dr(const CardFamily& s);

/// Throws InvalidArgument unless `s` is closed (finite or I).
bool has_minimal_generating_set_dP(const CardFamily& s);

/// Open sets are the complements of closed sets: empty or cofinite.
bool is_open(const CardFamily& u);

/// True unless u1 and u2 are nonempty and disjoint.  Throws InvalidArgument
/// unless both are open.
bool open_sets_intersect(const CardFamily& u1, const CardFamily& u2);

/// The open set I \ cl_p({i}) contains j and not i.
bool t0_separates(std::uint64_t i, std::uint64_t j);

}  // namespace ecl
