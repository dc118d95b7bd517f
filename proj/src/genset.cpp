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

#include "eclosure/genset.hpp"

#include <stdexcept>

#include "eclosure/error.hpp"
#include "eclosure/layout.hpp"

namespace ecl {

namespace {

// Each excluded endpoint must be the limit of a block whose points are
// themselves in the generating set, and an eta block whose points are all
// excluded generates nothing.
bool component_rules_generate(const Layout& lay, const std::vector<ComponentInfo>& comps) {
  for (const ComponentInfo& c : comps) {
    if (c.eta_class) {
      if (*c.point_flag == Membership::kExcluded) return false;
      continue;
    }
    if (c.least_flag == Membership::kExcluded && lay.block(c.first_block - 1).is_tight_eta()) {
      return false;
    }
    if (c.greatest_flag == Membership::kExcluded && lay.block(c.last_block + 1).is_tight_eta()) {
      return false;
    }
  }
  return true;
}

Cardinal scaled(const Cardinal& n, bool periodic) {
  if (periodic && !n.is_zero()) return Cardinal::aleph0();
  return n;
}

}  // namespace

std::string PointClass::to_string() const {
  std::string s;
  switch (kind) {
    case Kind::kPoint:
      s = "point " + point->to_string();
      break;
    case Kind::kInterior:
      s = "interior of blocks " + std::to_string(first_block) + ".." +
          (last_block == ComponentInfo::kThroughAllCopies ? std::string("inf")
                                                          : std::to_string(last_block));
      break;
    case Kind::kEtaPoints:
      s = "eta points of block " + std::to_string(first_block);
      break;
  }
  if (periodic) s += " (every copy)";
  return s;
}

bool has_least_generating_set(const FamilyDesc& f) {
  const Layout lay(f);
  const bool by_components = component_rules_generate(lay, components(f));
  const bool by_completion = !has_dense_interval(complete(f));
  if (by_components != by_completion) {
    throw std::logic_error("least generating set: component rules and completion disagree for " +
                           print_family(f));
  }
  return by_components;
}

std::optional<GenSetDesc> least_generating_set(const FamilyDesc& f) {
  if (!has_least_generating_set(f)) return std::nullopt;
  GenSetDesc g;
  g.exists_least = true;
  for (const ComponentInfo& c : components(f)) {
    auto add = [&](PointClass pc) {
      pc.first_block = c.first_block;
      pc.last_block = c.last_block;
      pc.periodic = c.periodic;
      const Cardinal n = scaled(pc.count, c.periodic);
      (pc.membership == Membership::kRequired ? g.required_count : g.excluded_count) += n;
      g.classes.push_back(std::move(pc));
    };
    if (c.eta_class) {
      PointClass pc;
      pc.kind = PointClass::Kind::kEtaPoints;
      pc.membership = *c.point_flag;
      pc.count = Cardinal::aleph0();
      add(pc);
      continue;
    }
    std::uint64_t endpoints = 0;
    if (c.least) {
      PointClass pc;
      pc.point = c.least;
      pc.membership = *c.least_flag;
      // a single point is taken by a limit on either side
      if (c.greatest && *c.greatest == *c.least && *c.greatest_flag == Membership::kExcluded) {
        pc.membership = Membership::kExcluded;
      }
      add(pc);
      ++endpoints;
    }
    if (c.greatest && !(c.least && *c.greatest == *c.least)) {
      PointClass pc;
      pc.point = c.greatest;
      pc.membership = *c.greatest_flag;
      add(pc);
      ++endpoints;
    }
    Cardinal interior = c.size;
    if (interior.is_finite()) interior = Cardinal::finite(interior.count() - endpoints);
    if (!interior.is_zero()) {
      PointClass pc;
      pc.kind = PointClass::Kind::kInterior;
      pc.count = interior;
      add(pc);
    }
  }
  return g;
}

CutPos CutPos::after_point(std::size_t block, std::int64_t offset) {
  CutPos c;
  c.kind = Kind::kAfterPoint;
  c.block = block;
  c.offset = offset;
  return c;
}

CutPos CutPos::at_junction(std::size_t junction) {
  CutPos c;
  c.kind = Kind::kAtJunction;
  c.block = junction;
  return c;
}

CutPos CutPos::in_eta(std::size_t block, Dyadic tag) {
  CutPos c;
  c.kind = Kind::kInEta;
  c.block = block;
  c.tag = tag;
  return c;
}

std::string CutPos::to_string() const {
  switch (kind) {
    case Kind::kAfterPoint:
      return "after " + PointRef::at(block, offset).to_string();
    case Kind::kAtJunction:
      return "junction " + std::to_string(block);
    case Kind::kInEta:
      return "eta " + std::to_string(block) + " above " + tag.to_string();
  }
  return "?";
}

FamilyDesc CutSplit::glued() const {
  FamilyDesc f;
  f.blocks = lower.blocks;
  f.junctions = lower.junctions;
  f.junctions.push_back(junction);
  f.blocks.insert(f.blocks.end(), upper.blocks.begin(), upper.blocks.end());
  f.junctions.insert(f.junctions.end(), upper.junctions.begin(), upper.junctions.end());
  validate(f);
  return f;
}

namespace {

// Splits the block list at block b, replacing it by `left_part` (ending the
// lower half) and `right_part` (starting the upper half).
CutSplit split_block(const FamilyDesc& f, std::size_t b, const Block& left_part,
                     const Block& right_part, Junction at_cut) {
  CutSplit s;
  s.lower.blocks.assign(f.blocks.begin(), f.blocks.begin() + static_cast<std::ptrdiff_t>(b));
  s.lower.junctions.assign(f.junctions.begin(),
                           f.junctions.begin() + static_cast<std::ptrdiff_t>(b));
  s.lower.blocks.push_back(left_part);
  s.upper.blocks.push_back(right_part);
  s.upper.blocks.insert(s.upper.blocks.end(),
                        f.blocks.begin() + static_cast<std::ptrdiff_t>(b + 1), f.blocks.end());
  s.upper.junctions.assign(f.junctions.begin() + static_cast<std::ptrdiff_t>(b),
                           f.junctions.end());
  s.junction = at_cut;
  validate(s.lower);
  validate(s.upper);
  return s;
}

}  // namespace

CutSplit split_at_cut(const FamilyDesc& f, const CutPos& c) {
  if (f.repeated) throw Unsupported("cuts of repeated families are not supported");
  validate(f);
  const std::size_t n = f.blocks.size();
  if (c.block >= n) throw InvalidArgument("cut " + c.to_string() + " names a missing block");
  const Block& b = f.blocks[c.block];
  const Junction point_point{Annotation::kNone};

  switch (c.kind) {
    case CutPos::Kind::kAtJunction: {
      if (c.block + 1 >= n) throw InvalidArgument("cut " + c.to_string() + " is not inside F");
      CutSplit s;
      s.lower.blocks.assign(f.blocks.begin(),
                            f.blocks.begin() + static_cast<std::ptrdiff_t>(c.block + 1));
      s.lower.junctions.assign(f.junctions.begin(),
                               f.junctions.begin() + static_cast<std::ptrdiff_t>(c.block));
      s.upper.blocks.assign(f.blocks.begin() + static_cast<std::ptrdiff_t>(c.block + 1),
                            f.blocks.end());
      s.upper.junctions.assign(f.junctions.begin() + static_cast<std::ptrdiff_t>(c.block + 1),
                               f.junctions.end());
      s.junction = f.junctions[c.block];
      return s;
    }
    case CutPos::Kind::kAfterPoint: {
      const std::int64_t k = c.offset;
      switch (b.kind()) {
        case BlockKind::kFin: {
          const auto size = static_cast<std::int64_t>(b.size());
          if (k < 0 || k >= size) throw InvalidArgument("offset out of range for " + b.to_string());
          if (k == size - 1) return split_at_cut(f, CutPos::at_junction(c.block));
          return split_block(f, c.block, Block::fin(static_cast<std::uint64_t>(k + 1)),
                             Block::fin(static_cast<std::uint64_t>(size - k - 1)), point_point);
        }
        case BlockKind::kOmega:
          if (k < 0) throw InvalidArgument("offset must be >= 0 for omega");
          return split_block(f, c.block, Block::fin(static_cast<std::uint64_t>(k + 1)),
                             Block::omega(), point_point);
        case BlockKind::kOmegaStar:
          if (k < 0) throw InvalidArgument("offset must be >= 0 for omega*");
          if (k == 0) return split_at_cut(f, CutPos::at_junction(c.block));
          return split_block(f, c.block, Block::omega_star(),
                             Block::fin(static_cast<std::uint64_t>(k)), point_point);
        case BlockKind::kZeta:
          return split_block(f, c.block, Block::omega_star(), Block::omega(), point_point);
        case BlockKind::kEta:
          throw InvalidArgument("cuts inside eta blocks take a dyadic tag");
      }
      break;
    }
    case CutPos::Kind::kInEta: {
      if (!b.is_eta()) throw InvalidArgument("cut " + c.to_string() + " needs an eta block");
      if (!(make_dyadic(c.tag.num, c.tag.exp) == c.tag)) {
        throw InvalidArgument("dyadic tag of " + c.to_string() + " is not reduced");
      }
      return split_block(f, c.block, b, b, Junction{Annotation::kMerged});
    }
  }
  throw InvalidArgument("unknown cut kind");
}

bool check_cut_equivalence(const FamilyDesc& f, const CutPos& c) {
  const CutSplit s = split_at_cut(f, c);
  return has_least_generating_set(f) ==
         (has_least_generating_set(s.lower) && has_least_generating_set(s.upper));
}

}  // namespace ecl
