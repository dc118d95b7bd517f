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

#include "eclosure/completion.hpp"

#include "eclosure/error.hpp"
#include "eclosure/layout.hpp"

namespace ecl {

namespace {

const char* side_name(LimitSide s) { return s == LimitSide::kUpper ? "upper" : "lower"; }

const char* site_name(LimitSite s) {
  switch (s) {
    case LimitSite::kOuterLeft:
      return "outer-left";
    case LimitSite::kOuterRight:
      return "outer-right";
    case LimitSite::kJunction:
      return "junction";
    case LimitSite::kEtaPointLimits:
      return "eta-point-limits";
    case LimitSite::kEtaCuts:
      return "eta-cuts";
    case LimitSite::kSupremum:
      return "supremum";
  }
  return "?";
}

// First and last points of a block, when they exist.
std::optional<PointRef> least_point(const Block& b, std::size_t i) {
  if (b.open_left()) return std::nullopt;
  return PointRef::at(i, 0);
}

std::optional<PointRef> greatest_point(const Block& b, std::size_t i) {
  if (b.open_right()) return std::nullopt;
  if (b.is_fin()) return PointRef::at(i, static_cast<std::int64_t>(b.size() - 1));
  return PointRef::at(i, 0);
}

LimitPoint make_limit(LimitSide side, LimitSite site, std::size_t block, bool periodic) {
  LimitPoint lp;
  lp.side = side;
  lp.site = site;
  lp.block = block;
  lp.periodic = periodic;
  return lp;
}

void add_junction_limits(const Layout& lay, std::size_t j, bool periodic,
                         std::vector<LimitPoint>& out) {
  const Block& left = lay.block(j);
  const Block& right = lay.block(j + 1);
  const Annotation a = lay.junction_after(j).annotation;
  switch (lay.shape_after(j)) {
    case JunctionShape::kPointPoint:
      return;
    case JunctionShape::kOpenOpen: {
      LimitPoint up = make_limit(LimitSide::kUpper, LimitSite::kJunction, j, periodic);
      up.junction = j;
      LimitPoint low = make_limit(LimitSide::kLower, LimitSite::kJunction, j + 1, periodic);
      low.junction = j;
      if (a == Annotation::kMerged) low.status = LimitStatus::kMerged;
      out.push_back(up);
      out.push_back(low);
      return;
    }
    case JunctionShape::kOpenPoint: {
      LimitPoint up = make_limit(LimitSide::kUpper, LimitSite::kJunction, j, periodic);
      up.junction = j;
      if (a == Annotation::kAbsorbed) {
        up.status = LimitStatus::kAbsorbed;
        up.absorbed_into = least_point(right, j + 1);
      }
      out.push_back(up);
      return;
    }
    case JunctionShape::kPointOpen: {
      LimitPoint low = make_limit(LimitSide::kLower, LimitSite::kJunction, j + 1, periodic);
      low.junction = j;
      if (a == Annotation::kAbsorbed) {
        low.status = LimitStatus::kAbsorbed;
        low.absorbed_into = greatest_point(left, j);
      }
      out.push_back(low);
      return;
    }
  }
}

void add_eta_limits(const Block& b, std::size_t i, bool periodic,
                    std::vector<LimitPoint>& out) {
  for (LimitSide side : {LimitSide::kUpper, LimitSide::kLower}) {
    LimitPoint lp = make_limit(side, LimitSite::kEtaPointLimits, i, periodic);
    lp.multiplicity = Cardinal::aleph0();
    if (b.is_tight_eta()) lp.status = LimitStatus::kAbsorbed;
    out.push_back(lp);
  }
  LimitPoint cuts = make_limit(LimitSide::kUpper, LimitSite::kEtaCuts, i, periodic);
  cuts.multiplicity = Cardinal::at_least_continuum();
  out.push_back(cuts);
}

}  // namespace

std::string LimitPoint::to_string() const {
  std::string s = std::string(side_name(side)) + " " + site_name(site) + " @" +
                  std::to_string(site == LimitSite::kJunction ? junction : block);
  switch (status) {
    case LimitStatus::kNew:
      s += " new";
      break;
    case LimitStatus::kAbsorbed:
      s += " absorbed";
      if (absorbed_into) s += " into " + absorbed_into->to_string();
      break;
    case LimitStatus::kMerged:
      s += " merged";
      break;
  }
  if (!(multiplicity == Cardinal::finite(1))) s += " x" + multiplicity.to_string();
  if (periodic) s += " (every copy)";
  return s;
}

CompletionDesc complete(const FamilyDesc& f) {
  const Layout lay(f);
  CompletionDesc c;
  c.base = f;
  const std::size_t g = lay.group_size();
  const bool rep = lay.infinite();

  if (lay.block(0).open_left()) {
    c.limit_points.push_back(make_limit(LimitSide::kLower, LimitSite::kOuterLeft, 0, false));
  }
  for (std::size_t i = 0; i < g; ++i) {
    const Block& b = lay.block(i);
    if (b.is_eta()) add_eta_limits(b, i, rep, c.limit_points);
    if (b.is_tight_eta()) c.eta_cut_mass.push_back(i);
    if (lay.has_junction_after(i)) add_junction_limits(lay, i, rep, c.limit_points);
  }
  if (rep) {
    c.limit_points.push_back(make_limit(LimitSide::kUpper, LimitSite::kSupremum, 0, false));
  } else if (lay.block(g - 1).open_right()) {
    c.limit_points.push_back(
        make_limit(LimitSide::kUpper, LimitSite::kOuterRight, g - 1, false));
  }

  Cardinal once = Cardinal::finite(0);
  Cardinal per_copy = Cardinal::finite(0);
  for (const LimitPoint& lp : c.limit_points) {
    if (lp.status != LimitStatus::kNew) continue;
    (lp.periodic ? per_copy : once) += lp.multiplicity;
  }
  if (rep && per_copy.is_finite() && !per_copy.is_zero()) per_copy = Cardinal::aleph0();
  c.new_points = once + per_copy;
  c.cardinality = element_count(f) + c.new_points;
  return c;
}

Cardinal accumulation_points(const FamilyDesc& f) { return complete(f).new_points; }

bool has_dense_interval(const CompletionDesc& c) { return !c.eta_cut_mass.empty(); }

std::optional<FamilyDesc> completion_as_family(const CompletionDesc& c) {
  const FamilyDesc& f = c.base;
  if (f.repeated) return std::nullopt;
  for (const Block& b : f.blocks) {
    if (b.is_eta()) return std::nullopt;
  }
  const Layout lay(f);
  FamilyDesc out;
  Annotation pending = Annotation::kNone;
  auto push = [&](const Block& b) {
    if (!out.blocks.empty()) out.junctions.push_back({pending});
    out.blocks.push_back(b);
    pending = Annotation::kNone;
  };
  const Block one = Block::fin(1);
  if (f.blocks.front().open_left()) {
    push(one);
    pending = Annotation::kAbsorbed;
  }
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    push(f.blocks[i]);
    if (i + 1 == f.blocks.size()) break;
    const Annotation a = f.junctions[i].annotation;
    switch (lay.shape_after(i)) {
      case JunctionShape::kPointPoint:
        break;
      case JunctionShape::kOpenOpen:
        pending = Annotation::kAbsorbed;
        push(one);
        if (a == Annotation::kSplit) push(one);
        pending = Annotation::kAbsorbed;
        break;
      case JunctionShape::kOpenPoint:
        pending = Annotation::kAbsorbed;
        if (a == Annotation::kSeparate) push(one);
        break;
      case JunctionShape::kPointOpen:
        if (a == Annotation::kSeparate) push(one);
        pending = Annotation::kAbsorbed;
        break;
    }
  }
  if (f.blocks.back().open_right()) {
    pending = Annotation::kAbsorbed;
    push(one);
  }
  validate(out);
  return out;
}

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::kI:
      return "i";
    case CaseLabel::kII:
      return "ii";
    case CaseLabel::kIII:
      return "iii";
    case CaseLabel::kIV:
      return "iv";
    case CaseLabel::kV:
      return "v";
  }
  return "?";
}

const char* to_string(Membership m) {
  return m == Membership::kRequired ? "required" : "excluded";
}

std::string ComponentInfo::to_string() const {
  std::string s = "blocks " + std::to_string(first_block) + "..";
  s += last_block == kThroughAllCopies ? "inf" : std::to_string(last_block);
  s += std::string(" case ") + ecl::to_string(label);
  if (eta_class) s += std::string(" eta points ") + ecl::to_string(*point_flag);
  if (least) s += " least " + least->to_string() + " " + ecl::to_string(*least_flag);
  if (greatest) s += " greatest " + greatest->to_string() + " " + ecl::to_string(*greatest_flag);
  if (periodic) s += " (every copy)";
  return s;
}

namespace {

ComponentInfo make_component(const Layout& lay, std::size_t s, std::size_t e, bool periodic) {
  ComponentInfo c;
  c.first_block = s;
  c.last_block = e;
  c.periodic = periodic;
  const Block& first = lay.block(s);
  if (s == e && first.is_eta()) {
    c.eta_class = true;
    c.size = Cardinal::aleph0();
    c.label = first.is_tight_eta() ? CaseLabel::kIII : CaseLabel::kI;
    c.point_flag = first.is_tight_eta() ? Membership::kExcluded : Membership::kRequired;
    return c;
  }
  c.size = Cardinal::finite(0);
  for (std::size_t i = s; i <= e; ++i) {
    const Block& b = lay.block(i);
    c.size += b.is_fin() ? Cardinal::finite(b.size()) : Cardinal::aleph0();
  }
  const bool left_abs =
      s > 0 && lay.junction_after(s - 1).annotation == Annotation::kAbsorbed;
  const bool right_abs = lay.has_junction_after(e) &&
                         lay.junction_after(e).annotation == Annotation::kAbsorbed;
  c.least = least_point(first, s);
  c.greatest = greatest_point(lay.block(e), e);
  if (c.least) c.least_flag = left_abs ? Membership::kExcluded : Membership::kRequired;
  if (c.greatest) c.greatest_flag = right_abs ? Membership::kExcluded : Membership::kRequired;
  if (c.size == Cardinal::finite(1)) {
    const int absorbed = int{left_abs} + int{right_abs};
    c.label = absorbed == 0 ? CaseLabel::kI : absorbed == 1 ? CaseLabel::kII : CaseLabel::kIII;
  } else {
    c.label = left_abs || right_abs ? CaseLabel::kV : CaseLabel::kIV;
  }
  return c;
}

// Whether `c` contains block `b`; sets `shift` to the copy offset used.
bool covers(const ComponentInfo& c, std::size_t g, std::size_t b, std::size_t& shift) {
  shift = 0;
  if (c.last_block == ComponentInfo::kThroughAllCopies) return b >= c.first_block;
  if (b < c.first_block) return false;
  if (!c.periodic) return b <= c.last_block;
  const std::size_t k = (b - c.first_block) / g;
  shift = k * g;
  return b - shift <= c.last_block;
}

}  // namespace

std::vector<ComponentInfo> components(const FamilyDesc& f) {
  const Layout lay(f);
  const std::size_t g = lay.group_size();
  std::vector<ComponentInfo> out;
  // Junction positions (within one copy) that end a run.
  std::vector<std::size_t> breaks;
  for (std::size_t j = 0; j < g; ++j) {
    if (lay.has_junction_after(j) && lay.shape_after(j) != JunctionShape::kPointPoint) {
      breaks.push_back(j);
    }
  }
  if (!lay.infinite()) {
    std::size_t s = 0;
    for (std::size_t j : breaks) {
      out.push_back(make_component(lay, s, j, false));
      s = j + 1;
    }
    out.push_back(make_component(lay, s, g - 1, false));
    return out;
  }
  if (breaks.empty()) {
    ComponentInfo c;
    c.first_block = 0;
    c.last_block = ComponentInfo::kThroughAllCopies;
    c.size = Cardinal::aleph0();
    c.least = PointRef::at(0, 0);
    c.least_flag = Membership::kRequired;
    c.label = CaseLabel::kIV;
    out.push_back(c);
    return out;
  }
  out.push_back(make_component(lay, 0, breaks.front(), false));
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    const std::size_t s = breaks[k] + 1;
    const std::size_t e = k + 1 < breaks.size() ? breaks[k + 1] : breaks.front() + g;
    out.push_back(make_component(lay, s, e, true));
  }
  return out;
}

Membership point_membership(const FamilyDesc& f, const std::vector<ComponentInfo>& comps,
                            const PointRef& p) {
  const Layout lay(f);
  lay.check_point(p);
  for (const ComponentInfo& c : comps) {
    std::size_t shift = 0;
    if (!covers(c, lay.group_size(), p.block, shift)) continue;
    if (c.eta_class) return *c.point_flag;
    PointRef local = p;
    local.block -= shift;
    const bool lo = c.least && local == *c.least;
    const bool hi = c.greatest && local == *c.greatest;
    if ((lo && *c.least_flag == Membership::kExcluded) ||
        (hi && *c.greatest_flag == Membership::kExcluded)) {
      return Membership::kExcluded;
    }
    return Membership::kRequired;
  }
  throw InvalidArgument("point " + p.to_string() + " lies in no component");
}

}  // namespace ecl
