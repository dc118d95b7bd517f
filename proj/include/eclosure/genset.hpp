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

// Least generating sets of the closure of a family, and cut decomposition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eclosure/completion.hpp"
#include "eclosure/family.hpp"

namespace ecl {

/// A symbolic set of points of F sharing one membership flag.
struct PointClass {
  enum class Kind {
    kPoint,      // a single endpoint of a component
    kInterior,   // the non-endpoint points of a component
    kEtaPoints,  // every point of an eta block
  };
  Kind kind = Kind::kPoint;
  std::optional<PointRef> point;
  std::size_t first_block = 0;
  std::size_t last_block = 0;
  bool periodic = false;
  Membership membership = Membership::kRequired;
  Cardinal count = Cardinal::finite(1);

  std::string to_string() const;
};

struct GenSetDesc {
  bool exists_least = false;
  std::vector<PointClass> classes;
  Cardinal required_count = Cardinal::finite(0);
  Cardinal excluded_count = Cardinal::finite(0);
};

bool has_least_generating_set(const FamilyDesc& f);

/// nullopt when the closure has no least generating set.
std::optional<GenSetDesc> least_generating_set(const FamilyDesc& f);

struct CutPos {
  enum class Kind {
    kAfterPoint,  // right after a point of a discrete block
    kAtJunction,  // between block `block` and block `block + 1`
    kInEta,       // inside an eta block at a point-free position
  };
  Kind kind = Kind::kAtJunction;
  std::size_t block = 0;
  /// kAfterPoint: offset of the point the cut follows.  For omega* the cut
  /// after offset k sits between offsets k and k - 1.
  std::int64_t offset = 0;
  /// kInEta: the cut lies just above the point with this tag, below every
  /// point of the next dyadic level above it.
  Dyadic tag;

  static CutPos after_point(std::size_t block, std::int64_t offset);
  static CutPos at_junction(std::size_t junction);
  static CutPos in_eta(std::size_t block, Dyadic tag);

  std::string to_string() const;
};

struct CutSplit {
  FamilyDesc lower;
  FamilyDesc upper;
  /// Joins the last block of `lower` to the first block of `upper`.
  Junction junction;

  /// lower + junction + upper as one family.
  FamilyDesc glued() const;
};

/// Throws InvalidArgument for cuts that are not inside F, Unsupported for
/// repeated families.
CutSplit split_at_cut(const FamilyDesc& f, const CutPos& c);

bool check_cut_equivalence(const FamilyDesc& f, const CutPos& c);

}  // namespace ecl
