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
#include <optional>

#include "eclosure/family.hpp"

namespace ecl {

/// Unrolled view of a family: block i of a repeated family is block
/// i mod group_size() of the group, so the sequence is infinite.
class Layout {
 public:
  /// Validates `f`.
  explicit Layout(FamilyDesc f);

  const FamilyDesc& family() const noexcept { return family_; }
  bool infinite() const noexcept { return family_.repeated; }
  std::size_t group_size() const noexcept { return family_.blocks.size(); }
  /// Number of blocks, or nullopt for repeated families.
  std::optional<std::size_t> block_count() const;

  bool has_block(std::size_t i) const noexcept {
    return infinite() || i < family_.blocks.size();
  }
  const Block& block(std::size_t i) const;

  /// True when block i + 1 exists.
  bool has_junction_after(std::size_t i) const noexcept { return has_block(i + 1); }
  const Junction& junction_after(std::size_t i) const;
  JunctionShape shape_after(std::size_t i) const;

  /// Throws InvalidArgument unless `p` names an element of F.
  void check_point(const PointRef& p) const;

  /// Points of block `b` in increasing order, at most `limit` of them,
  /// starting from the lowest for blocks with a least element and from the
  /// point nearest the middle otherwise (zeta: 0, -1, 1, ...; eta: by dyadic
  /// level).  Used for sampling.
  std::vector<PointRef> sample_points(std::size_t b, std::size_t limit) const;

 private:
  FamilyDesc family_;
};

}  // namespace ecl
