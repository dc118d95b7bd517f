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

#include "eclosure/layout.hpp"

#include "eclosure/error.hpp"

namespace ecl {

Layout::Layout(FamilyDesc f) : family_(std::move(f)) { validate(family_); }

std::optional<std::size_t> Layout::block_count() const {
  if (infinite()) return std::nullopt;
  return family_.blocks.size();
}

const Block& Layout::block(std::size_t i) const {
  if (!has_block(i)) throw InvalidArgument("block index " + std::to_string(i) + " out of range");
  return family_.blocks[i % family_.blocks.size()];
}

const Junction& Layout::junction_after(std::size_t i) const {
  if (!has_junction_after(i)) {
    throw InvalidArgument("no junction after block " + std::to_string(i));
  }
  const std::size_t g = family_.blocks.size();
  if (i % g == g - 1) return family_.link;
  return family_.junctions[i % g];
}

JunctionShape Layout::shape_after(std::size_t i) const {
  return junction_shape(block(i), block(i + 1));
}

void Layout::check_point(const PointRef& p) const {
  if (!has_block(p.block)) {
    throw InvalidArgument("point " + p.to_string() + " names a missing block");
  }
  const Block& b = block(p.block);
  if (b.is_eta() != p.eta) {
    throw InvalidArgument("point " + p.to_string() +
                          (b.is_eta() ? " needs a dyadic tag" : " must not carry a dyadic tag"));
  }
  switch (b.kind()) {
    case BlockKind::kFin:
      if (p.offset < 0 || static_cast<std::uint64_t>(p.offset) >= b.size()) {
        throw InvalidArgument("offset out of range for " + b.to_string());
      }
      break;
    case BlockKind::kOmega:
    case BlockKind::kOmegaStar:
      if (p.offset < 0) throw InvalidArgument("offset must be >= 0 for " + b.to_string());
      break;
    case BlockKind::kZeta:
      break;
    case BlockKind::kEta:
      if (!(make_dyadic(p.dyadic.num, p.dyadic.exp) == p.dyadic)) {
        throw InvalidArgument("dyadic tag of " + p.to_string() + " is not reduced");
      }
      break;
  }
}

std::vector<PointRef> Layout::sample_points(std::size_t b, std::size_t limit) const {
  std::vector<PointRef> out;
  const Block& blk = block(b);
  switch (blk.kind()) {
    case BlockKind::kFin:
      for (std::uint64_t k = 0; k < blk.size() && out.size() < limit; ++k) {
        out.push_back(PointRef::at(b, static_cast<std::int64_t>(k)));
      }
      break;
    case BlockKind::kOmega:
    case BlockKind::kOmegaStar:
      for (std::size_t k = 0; out.size() < limit; ++k) {
        out.push_back(PointRef::at(b, static_cast<std::int64_t>(k)));
      }
      break;
    case BlockKind::kZeta:
      for (std::int64_t k = 0; out.size() < limit; ++k) {
        const std::int64_t z = k % 2 == 0 ? k / 2 : -(k + 1) / 2;
        out.push_back(PointRef::at(b, z));
      }
      break;
    case BlockKind::kEta:
      for (unsigned level = 1; level <= 62 && out.size() < limit; ++level) {
        for (std::uint64_t num = 1; num < (std::uint64_t{1} << level) && out.size() < limit;
             num += 2) {
          out.push_back(PointRef::eta_point(b, Dyadic{num, level}));
        }
      }
      break;
  }
  return out;
}

}  // namespace ecl
