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

// Concrete index-set realization of a family.
//
// Every point of F sits at a rational position: block b occupies [2b, 2b + 1].
// Each natural i carries a threshold t(i), a position refined by a small
// integer tie-breaker, and the index set of a point at position x is
// J = {i : t(i) < x}.  Limits of chains of points are again of this form, so
// every set the checks deal with is named by a single location.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eclosure/cardinal.hpp"
#include "eclosure/layout.hpp"

namespace ecl {

using Rational = boost::multiprecision::cpp_rational;

/// A position with a tie-breaker, ordered lexicographically.  Points use
/// eps 0, thresholds eps in {-2, 0, 2}, chain limits eps -3 (union) or 3
/// (intersection).  `top` lies above everything.
struct Loc {
  Rational x;
  int eps = 0;
  bool top = false;

  static Loc at(Rational x, int eps = 0) { return Loc{std::move(x), eps, false}; }
  static Loc top_loc() { return Loc{Rational(0), 0, true}; }

  bool operator==(const Loc& o) const {
    return top == o.top && (top || (x == o.x && eps == o.eps));
  }
  bool operator<(const Loc& o) const {
    if (top || o.top) return !top && o.top;
    if (x != o.x) return x < o.x;
    return eps < o.eps;
  }
  bool operator<=(const Loc& o) const { return !(o < *this); }
  bool operator>(const Loc& o) const { return o < *this; }
  bool operator>=(const Loc& o) const { return !(*this < o); }
};

std::string to_string(const Loc& l);

struct Threshold {
  enum class Kind { kBase, kGap, kEtaGrid, kEtaWitness, kJunctionWitness };
  Loc loc;
  Kind kind = Kind::kBase;
  std::size_t block = 0;
};

/// A subfamily of F, possibly with extra sets from outside F.
struct Subfamily {
  /// Points p of F with lo < loc(p) <= hi for some segment.
  std::vector<std::pair<Loc, Loc>> segments;
  /// Removed from the segments.
  std::vector<PointRef> excluded;
  /// Added individually.
  std::vector<PointRef> points;
  /// Sets named by location, typically limits.
  std::vector<Loc> extra;
};

class Realization {
 public:
  static constexpr std::size_t kDefaultCapacity = 1024;
  static constexpr std::int64_t kMaxOffset = 4096;

  Realization(FamilyDesc f, std::uint64_t seed, std::size_t capacity = kDefaultCapacity);

  const Layout& layout() const noexcept { return layout_; }
  std::uint64_t seed() const noexcept { return seed_; }
  /// Number of indices with a materialized threshold.
  std::size_t size() const noexcept { return thresholds_.size(); }
  const Threshold& threshold(std::size_t i) const { return thresholds_.at(i); }

  Loc point_loc(const PointRef& p) const;
  /// i in the set named by `b`.
  bool member(const Loc& b, std::size_t i) const { return b > thresholds_.at(i).loc; }

  /// Exact test over all (not only materialized) thresholds: some t(i) with
  /// lo <= t(i) < hi.  Two locations name the same set iff this is false.
  bool thresholds_between(const Loc& lo, const Loc& hi) const;
  bool same_set(const Loc& a, const Loc& b) const;
  /// Infinitely many thresholds lie in [lo, hi).
  bool dense_between(const Loc& lo, const Loc& hi) const;

  /// Points of F nearest to `b`: the greatest at or below and the least at
  /// or above, when they exist.
  std::pair<std::optional<PointRef>, std::optional<PointRef>> neighbors(const Loc& b) const;
  /// A point of F naming the same set as `b`, if any.
  std::optional<PointRef> equal_point(const Loc& b) const;

  Subfamily whole() const;
  Subfamily without(const PointRef& p) const;
  bool contains(const Subfamily& s, const PointRef& p) const;

  /// Members of `s` (points and extras) located in (lo, hi].
  Cardinal count(const Subfamily& s, const Loc& lo, const Loc& hi) const;

  /// Location of the union (upper) or intersection (lower) of a block.
  Loc block_union(std::size_t b) const;
  Loc block_intersection(std::size_t b) const;
  /// Union of the points of F below position x and intersection of those
  /// above it.
  Loc union_below(const Rational& x) const { return Loc::at(x, -3); }
  Loc intersection_above(const Rational& x) const { return Loc::at(x, 3); }

  /// Unit coordinate of the block base.
  static Rational base(std::size_t b) { return Rational(2 * static_cast<long long>(b)); }

 private:
  struct Neighbors {
    std::optional<std::pair<Rational, PointRef>> below;  // greatest point <= u
    std::optional<std::pair<Rational, PointRef>> above;  // least point >= u
  };
  Neighbors block_neighbors(std::size_t b, const Rational& u) const;
  Cardinal count_block(std::size_t b, const Loc& lo, const Loc& hi) const;
  bool exact_threshold(const Rational& x, int eps_lo, int eps_hi) const;
  bool isolated_threshold_in(const Loc& lo, const Loc& hi) const;
  void generate(std::size_t capacity);

  Layout layout_;
  std::uint64_t seed_;
  std::vector<Threshold> thresholds_;
};

}  // namespace ecl
