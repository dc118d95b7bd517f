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

// Symbolic closure of a family: accumulation points and connected components.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eclosure/cardinal.hpp"
#include "eclosure/family.hpp"

namespace ecl {

/// upper = union of an increasing chain, lower = intersection of a
/// decreasing chain.
enum class LimitSide { kUpper, kLower };

enum class LimitSite {
  kOuterLeft,       // lower limit of the whole family (block 0 open on the left)
  kOuterRight,      // upper limit of the whole family (last block open on the right)
  kJunction,        // limit on one side of a junction
  kEtaPointLimits,  // the cut limits next to every point of an eta block
  kEtaCuts,         // limits at cuts of an eta block that no point fills
  kSupremum,        // union of all copies of a repeated family
};

enum class LimitStatus {
  kNew,       // a point of the closure outside F
  kAbsorbed,  // equals a point of F
  kMerged,    // equals another limit already listed
};

struct LimitPoint {
  LimitSide side = LimitSide::kUpper;
  LimitSite site = LimitSite::kJunction;
  /// Block whose end (or interior, for eta sites) carries the limit.
  std::size_t block = 0;
  /// For junction sites: junction index (joins block j and j + 1).
  std::size_t junction = 0;
  LimitStatus status = LimitStatus::kNew;
  std::optional<PointRef> absorbed_into;
  /// How many closure points the record stands for.
  Cardinal multiplicity = Cardinal::finite(1);
  /// Repeated families: the record occurs once in every copy.
  bool periodic = false;

  std::string to_string() const;
};

struct CompletionDesc {
  FamilyDesc base;
  std::vector<LimitPoint> limit_points;
  /// Eta(tight) blocks, each carrying a continuum of cut points.
  std::vector<std::size_t> eta_cut_mass;
  /// |closure \ F|.
  Cardinal new_points;
  /// |closure|.
  Cardinal cardinality;
};

CompletionDesc complete(const FamilyDesc& f);
Cardinal accumulation_points(const FamilyDesc& f);
bool has_dense_interval(const CompletionDesc& c);

/// The closure as a family of its own, when it is countable and finite in
/// block count: each new limit becomes a fin(1) block absorbed on its open
/// side.  Returns nullopt for families with eta blocks or repetition.
std::optional<FamilyDesc> completion_as_family(const CompletionDesc& c);

enum class CaseLabel { kI, kII, kIII, kIV, kV };
const char* to_string(CaseLabel c);

enum class Membership { kRequired, kExcluded };
const char* to_string(Membership m);

/// A maximal discrete interval of F, or the whole point set of an eta block
/// (each of whose points is a singleton component).
struct ComponentInfo {
  /// last_block of a component that runs through every copy.
  static constexpr std::size_t kThroughAllCopies = static_cast<std::size_t>(-1);

  /// Unrolled block range, inclusive.
  std::size_t first_block = 0;
  std::size_t last_block = 0;
  /// Repeated families: occurs in every copy, shifted by the group size.
  bool periodic = false;
  bool eta_class = false;
  std::optional<PointRef> least;
  std::optional<PointRef> greatest;
  std::optional<Membership> least_flag;
  std::optional<Membership> greatest_flag;
  /// Eta classes: the flag shared by every point.
  std::optional<Membership> point_flag;
  CaseLabel label = CaseLabel::kIV;
  Cardinal size = Cardinal::finite(1);

  std::string to_string() const;
};

std::vector<ComponentInfo> components(const FamilyDesc& f);

/// Component flags applied to one point: endpoints per their flags,
/// everything else required.
Membership point_membership(const FamilyDesc& f, const std::vector<ComponentInfo>& comps,
                            const PointRef& p);

}  // namespace ecl
