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

#include "eclosure/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "eclosure/error.hpp"
#include "eclosure/genset.hpp"

namespace ecl {

namespace {

const Loc kBelowAll = Loc::at(Rational(-10));

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + "}";
}

// Matching window (lo, hi] of the depth-d pattern of c, or nullopt when no
// location satisfies it.
std::optional<std::pair<Loc, Loc>> window(const Realization& r, const CandidateDesc& c,
                                          std::size_t d) {
  Loc lo = kBelowAll;
  Loc hi = Loc::top_loc();
  for (std::size_t i = 0; i < d; ++i) {
    const Loc& t = r.threshold(i).loc;
    if (c.contains(r, i)) {
      if (lo < t) lo = t;
    } else if (t < hi) {
      hi = t;
    }
  }
  if (!(lo < hi)) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool infinite_in_window(const Realization& r, const Subfamily& s, const CandidateDesc& c,
                        std::size_t d) {
  const auto w = window(r, c, d);
  if (!w) return false;
  return !r.count(s, w->first, w->second).is_finite();
}

std::vector<std::size_t> window_blocks(const Layout& lay) {
  const std::size_t n = lay.infinite() ? 2 * lay.group_size() : *lay.block_count();
  std::vector<std::size_t> v(n);
  for (std::size_t b = 0; b < n; ++b) v[b] = b;
  return v;
}

// Sampled points of block b, including the greatest point of a fin block.
std::vector<PointRef> block_samples(const Layout& lay, std::size_t b, std::size_t per_block) {
  std::vector<PointRef> v = lay.sample_points(b, per_block);
  const Block& blk = lay.block(b);
  if (blk.is_fin() && blk.size() > per_block) {
    v.push_back(PointRef::at(b, static_cast<std::int64_t>(blk.size() - 1)));
  }
  return v;
}

std::vector<PointRef> sampled_points(const Layout& lay, std::size_t per_block) {
  std::vector<PointRef> v;
  for (std::size_t b : window_blocks(lay)) {
    for (const PointRef& p : block_samples(lay, b, per_block)) v.push_back(p);
  }
  return v;
}

const Rational kCutFractions[] = {Rational(1, 3), Rational(1, 5), Rational(2, 3), Rational(4, 7)};

PointRef fold(const PointRef& p, std::size_t g) {
  PointRef q = p;
  q.block %= g;
  return q;
}

}  // namespace

bool PatternFormula::matches(const Realization& r, const Loc& set) const {
  for (std::size_t i : probe) {
    const bool in_trace = std::find(trace.begin(), trace.end(), i) != trace.end();
    if (r.member(set, i) != in_trace) return false;
  }
  return true;
}

std::string PatternFormula::to_string() const {
  return "probe " + join(probe) + " trace " + join(trace);
}

CandidateDesc CandidateDesc::of_point(const Realization& r, const PointRef& p) {
  r.layout().check_point(p);
  CandidateDesc c;
  c.kind = Kind::kPoint;
  c.point = p;
  c.loc = r.point_loc(p);
  c.label = "point " + p.to_string();
  return c;
}

CandidateDesc CandidateDesc::union_at(Loc l, std::string label) {
  CandidateDesc c;
  c.kind = Kind::kUnion;
  c.loc = std::move(l);
  c.label = std::move(label);
  return c;
}

CandidateDesc CandidateDesc::intersection_at(Loc l, std::string label) {
  CandidateDesc c;
  c.kind = Kind::kIntersection;
  c.loc = std::move(l);
  c.label = std::move(label);
  return c;
}

CandidateDesc CandidateDesc::explicit_set(IndexSet s, std::string label) {
  CandidateDesc c;
  c.kind = Kind::kExplicit;
  c.set = std::move(s);
  c.label = std::move(label);
  return c;
}

bool CandidateDesc::contains(const Realization& r, std::size_t i) const {
  if (kind == Kind::kExplicit) return set->contains(i);
  return r.member(loc, i);
}

TriBool in_closure(const Realization& r, const Subfamily& s, const CandidateDesc& c,
                   std::size_t depth) {
  if (depth == 0) throw InvalidArgument("depth must be positive");
  if (depth > r.size()) {
    throw InvalidArgument("depth " + std::to_string(depth) + " exceeds realization capacity " +
                          std::to_string(r.size()));
  }
  if (c.kind != CandidateDesc::Kind::kExplicit) {
    if (auto p = r.equal_point(c.loc); p && r.contains(s, *p)) return TriBool::kYes;
    for (const Loc& e : s.extra) {
      if (r.same_set(e, c.loc)) return TriBool::kYes;
    }
  }
  if (!infinite_in_window(r, s, c, depth)) return TriBool::kNo;
  if (!infinite_in_window(r, s, c, r.size())) return TriBool::kUnknown;
  return TriBool::kYes;
}

std::optional<PatternFormula> isolating_pattern(const Realization& r, const PointRef& p,
                                                std::size_t max_depth) {
  r.layout().check_point(p);
  const Loc loc = r.point_loc(p);
  const std::size_t d = std::min(max_depth, r.size());
  std::optional<std::size_t> lo_i;
  std::optional<std::size_t> hi_i;
  for (std::size_t i = 0; i < d; ++i) {
    const Loc& t = r.threshold(i).loc;
    if (t < loc) {
      if (!lo_i || r.threshold(*lo_i).loc < t) lo_i = i;
    } else if (!hi_i || t < r.threshold(*hi_i).loc) {
      hi_i = i;
    }
  }
  const Loc lo = lo_i ? r.threshold(*lo_i).loc : kBelowAll;
  const Loc hi = hi_i ? r.threshold(*hi_i).loc : Loc::top_loc();
  if (!(r.count(r.whole(), lo, hi) == Cardinal::finite(1))) return std::nullopt;
  PatternFormula f;
  if (lo_i) {
    f.probe.push_back(*lo_i);
    f.trace.push_back(*lo_i);
  }
  if (hi_i) f.probe.push_back(*hi_i);
  std::sort(f.probe.begin(), f.probe.end());
  return f;
}

std::optional<std::pair<PatternFormula, PatternFormula>> separating_patterns(const Realization& r,
                                                                             const Loc& p,
                                                                             const Loc& q) {
  if (r.same_set(p, q)) return std::nullopt;
  const bool swap = q < p;
  const Loc& a = swap ? q : p;
  const Loc& b = swap ? p : q;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Loc& t = r.threshold(i).loc;
    if (a <= t && t < b) {
      PatternFormula in{{i}, {i}};
      PatternFormula out{{i}, {}};
      if (swap) return std::make_pair(in, out);
      return std::make_pair(out, in);
    }
  }
  return std::nullopt;
}

Subfamily unite(const Realization& r, const Subfamily& a, const Subfamily& b) {
  Subfamily u;
  u.segments = a.segments;
  u.segments.insert(u.segments.end(), b.segments.begin(), b.segments.end());
  for (const Subfamily* s : {&a, &b}) {
    for (const PointRef& p : s->excluded) {
      if (!r.contains(a, p) && !r.contains(b, p)) u.excluded.push_back(p);
    }
    u.points.insert(u.points.end(), s->points.begin(), s->points.end());
    u.extra.insert(u.extra.end(), s->extra.begin(), s->extra.end());
  }
  return u;
}

Subfamily with_candidate(const Subfamily& s, const CandidateDesc& c) {
  Subfamily t = s;
  switch (c.kind) {
    case CandidateDesc::Kind::kPoint:
      t.points.push_back(*c.point);
      break;
    case CandidateDesc::Kind::kUnion:
    case CandidateDesc::Kind::kIntersection:
      t.extra.push_back(c.loc);
      break;
    case CandidateDesc::Kind::kExplicit:
      throw InvalidArgument("explicit index sets cannot join a subfamily");
  }
  return t;
}

CheckTally check_additivity(const Realization& r, const Subfamily& a, const Subfamily& b,
                            const std::vector<CandidateDesc>& cands, std::size_t depth) {
  CheckTally t;
  const Subfamily u = unite(r, a, b);
  for (const CandidateDesc& c : cands) {
    const TriBool ra = in_closure(r, a, c, depth);
    const TriBool rb = in_closure(r, b, c, depth);
    const TriBool ru = in_closure(r, u, c, depth);
    if (ra == TriBool::kUnknown || rb == TriBool::kUnknown || ru == TriBool::kUnknown) {
      ++t.inconclusive;
      continue;
    }
    ++t.checked;
    if ((ru == TriBool::kYes) != (ra == TriBool::kYes || rb == TriBool::kYes)) ++t.violations;
  }
  return t;
}

CheckTally check_additivity(const FamilyDesc& a, const FamilyDesc& b, std::uint64_t seed,
                            std::size_t depth) {
  if (a.repeated || b.repeated) throw Unsupported("additivity needs two finite layouts");
  validate(a);
  validate(b);
  FamilyDesc f;
  f.blocks = a.blocks;
  f.junctions = a.junctions;
  const JunctionShape shape = junction_shape(a.blocks.back(), b.blocks.front());
  Junction link;
  if (shape == JunctionShape::kOpenOpen) link.annotation = Annotation::kSplit;
  if (shape == JunctionShape::kOpenPoint || shape == JunctionShape::kPointOpen) {
    link.annotation = Annotation::kSeparate;
  }
  f.junctions.push_back(link);
  f.blocks.insert(f.blocks.end(), b.blocks.begin(), b.blocks.end());
  f.junctions.insert(f.junctions.end(), b.junctions.begin(), b.junctions.end());
  const Realization r(f, seed, std::max(Realization::kDefaultCapacity, depth));
  const Loc cut = Loc::at(Realization::base(a.blocks.size()) - Rational(1, 2));
  Subfamily sa;
  sa.segments.emplace_back(Loc::at(Rational(-2)), cut);
  Subfamily sb;
  sb.segments.emplace_back(cut, Loc::top_loc());
  return check_additivity(r, sa, sb, sample_candidates(r, 3), depth);
}

CheckTally check_exchange(const Realization& r, const Subfamily& s, const CandidateDesc& t1,
                          const CandidateDesc& t2, std::size_t depth) {
  CheckTally t;
  const TriBool with_t1 = in_closure(r, with_candidate(s, t1), t2, depth);
  const TriBool plain = in_closure(r, s, t2, depth);
  if (with_t1 == TriBool::kUnknown || plain == TriBool::kUnknown) {
    ++t.inconclusive;
    return t;
  }
  if (with_t1 == TriBool::kYes && plain == TriBool::kNo) {
    const TriBool back = in_closure(r, with_candidate(s, t2), t1, depth);
    if (back == TriBool::kUnknown) {
      ++t.inconclusive;
      return t;
    }
    if (back == TriBool::kNo) ++t.violations;
  }
  ++t.checked;
  return t;
}

std::vector<CandidateDesc> sample_candidates(const Realization& r, std::size_t per_block) {
  const Layout& lay = r.layout();
  std::vector<CandidateDesc> v;
  for (std::size_t b : window_blocks(lay)) {
    const Block& blk = lay.block(b);
    const std::string tag = "block " + std::to_string(b);
    if (blk.open_left()) v.push_back(CandidateDesc::intersection_at(r.block_intersection(b), "inf " + tag));
    for (const PointRef& p : block_samples(lay, b, per_block)) {
      v.push_back(CandidateDesc::of_point(r, p));
      if (blk.is_eta()) {
        const Rational x = r.point_loc(p).x;
        v.push_back(CandidateDesc::union_at(r.union_below(x), "below " + p.to_string()));
        v.push_back(CandidateDesc::intersection_at(r.intersection_above(x), "above " + p.to_string()));
      }
    }
    if (blk.is_eta()) {
      const Rational x = Realization::base(b) + kCutFractions[0];
      v.push_back(CandidateDesc::union_at(r.union_below(x), "cut " + tag));
    }
    if (blk.open_right()) v.push_back(CandidateDesc::union_at(r.block_union(b), "sup " + tag));
  }
  if (lay.infinite()) v.push_back(CandidateDesc::union_at(Loc::top_loc(), "sup F"));
  return v;
}

namespace {

const char* site_label(LimitSite s) {
  switch (s) {
    case LimitSite::kOuterLeft:
      return "outer-left";
    case LimitSite::kOuterRight:
      return "outer-right";
    case LimitSite::kJunction:
      return "junction";
    case LimitSite::kEtaPointLimits:
      return "eta-point";
    case LimitSite::kEtaCuts:
      return "eta-cut";
    case LimitSite::kSupremum:
      return "supremum";
  }
  return "?";
}

const char* status_label(LimitStatus s) {
  switch (s) {
    case LimitStatus::kNew:
      return "new";
    case LimitStatus::kAbsorbed:
      return "absorbed";
    case LimitStatus::kMerged:
      return "merged";
  }
  return "?";
}

const LimitPoint* symbolic_record(const CompletionDesc& c, const ClosureCandidate& cc,
                                  std::size_t g) {
  for (const LimitPoint& lp : c.limit_points) {
    if (lp.site != cc.site || lp.side != cc.side) continue;
    switch (cc.site) {
      case LimitSite::kJunction:
        if (lp.junction != cc.junction % g) continue;
        break;
      case LimitSite::kEtaPointLimits:
      case LimitSite::kEtaCuts:
        if (lp.block != cc.block % g) continue;
        break;
      default:
        break;
    }
    return &lp;
  }
  return nullptr;
}

void compare(const CompletionDesc& c, const ClosureCandidate& cc, std::size_t g,
             std::vector<std::string>& out) {
  const std::string who = std::string(site_label(cc.site)) + " " + cc.cand.label;
  if (cc.accepted != TriBool::kYes) {
    out.push_back(who + ": limit not in closure (" + to_string(cc.accepted) + ")");
  }
  if (cc.site == LimitSite::kEtaCuts && cc.side == LimitSide::kLower) {
    if (cc.status == LimitStatus::kAbsorbed) out.push_back(who + ": cut limit equals a point");
    return;
  }
  LimitStatus expected = LimitStatus::kNew;
  std::optional<PointRef> into;
  if (cc.site != LimitSite::kEtaCuts) {
    const LimitPoint* lp = symbolic_record(c, cc, g);
    if (!lp) {
      out.push_back(who + ": no symbolic record");
      return;
    }
    expected = lp->status;
    into = lp->absorbed_into;
  }
  if (cc.status != expected) {
    out.push_back(who + ": oracle " + status_label(cc.status) + ", symbolic " +
                  status_label(expected));
    return;
  }
  if (expected == LimitStatus::kAbsorbed && into && cc.equals_point &&
      !(fold(*cc.equals_point, g) == *into)) {
    out.push_back(who + ": absorbed into " + cc.equals_point->to_string() + ", symbolic " +
                  into->to_string());
  }
}

}  // namespace

ClosureEnumeration closure_enumerate(const Realization& r, std::size_t depth) {
  const Layout& lay = r.layout();
  const std::size_t g = lay.group_size();
  const Subfamily whole = r.whole();
  ClosureEnumeration e;
  auto add = [&](CandidateDesc cand, LimitSite site, LimitSide side, std::size_t b,
                 std::size_t j) {
    ClosureCandidate cc;
    cc.cand = std::move(cand);
    cc.site = site;
    cc.side = side;
    cc.block = b;
    cc.junction = j;
    cc.equals_point = r.equal_point(cc.cand.loc);
    if (cc.equals_point) {
      cc.status = LimitStatus::kAbsorbed;
    } else {
      for (std::size_t k = 0; k < e.candidates.size(); ++k) {
        if (r.same_set(e.candidates[k].cand.loc, cc.cand.loc)) {
          cc.status = LimitStatus::kMerged;
          cc.merged_with = k;
          break;
        }
      }
    }
    cc.accepted = in_closure(r, whole, cc.cand, depth);
    e.candidates.push_back(std::move(cc));
  };

  bool has_eta = false;
  for (std::size_t b : window_blocks(lay)) {
    const Block& blk = lay.block(b);
    const std::string tag = "block " + std::to_string(b);
    if (blk.open_left()) {
      const LimitSite site = b == 0 ? LimitSite::kOuterLeft : LimitSite::kJunction;
      add(CandidateDesc::intersection_at(r.block_intersection(b), "inf " + tag), site,
          LimitSide::kLower, b, b == 0 ? 0 : b - 1);
    }
    if (blk.is_eta()) {
      has_eta = true;
      for (const PointRef& p : lay.sample_points(b, 3)) {
        const Rational x = r.point_loc(p).x;
        add(CandidateDesc::union_at(r.union_below(x), "below " + p.to_string()),
            LimitSite::kEtaPointLimits, LimitSide::kUpper, b, 0);
        add(CandidateDesc::intersection_at(r.intersection_above(x), "above " + p.to_string()),
            LimitSite::kEtaPointLimits, LimitSide::kLower, b, 0);
      }
      for (const Rational& q : kCutFractions) {
        const Rational x = Realization::base(b) + q;
        const std::string at = tag + " + " + q.str();
        add(CandidateDesc::union_at(r.union_below(x), "cut below " + at), LimitSite::kEtaCuts,
            LimitSide::kUpper, b, 0);
        add(CandidateDesc::intersection_at(r.intersection_above(x), "cut above " + at),
            LimitSite::kEtaCuts, LimitSide::kLower, b, 0);
      }
    }
    if (blk.open_right()) {
      const bool last = !lay.has_junction_after(b);
      add(CandidateDesc::union_at(r.block_union(b), "sup " + tag),
          last ? LimitSite::kOuterRight : LimitSite::kJunction, LimitSide::kUpper, b, b);
    }
  }
  if (lay.infinite()) {
    add(CandidateDesc::union_at(Loc::top_loc(), "sup F"), LimitSite::kSupremum,
        LimitSide::kUpper, 0, 0);
  }

  const CompletionDesc c = complete(lay.family());
  for (const ClosureCandidate& cc : e.candidates) {
    compare(c, cc, g, e.mismatches);
    if (cc.site == LimitSite::kEtaCuts && cc.status == LimitStatus::kNew &&
        cc.accepted == TriBool::kYes) {
      e.continuum = true;
    }
  }
  if (e.continuum != (c.new_points.tag() == Cardinal::Tag::kAtLeastContinuum)) {
    e.mismatches.push_back(std::string("continuum of cut limits: oracle ") +
                           (e.continuum ? "yes" : "no") + ", symbolic " +
                           c.new_points.to_string());
  }
  if (!lay.infinite() && !has_eta) {
    std::size_t n = 0;
    for (const ClosureCandidate& cc : e.candidates) {
      if (cc.status == LimitStatus::kNew && cc.accepted == TriBool::kYes) ++n;
    }
    e.new_count = n;
    if (!(Cardinal::finite(n) == c.new_points)) {
      e.mismatches.push_back("new limits: oracle " + std::to_string(n) + ", symbolic " +
                             c.new_points.to_string());
    }
  }
  return e;
}

bool VerifyReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.passed; });
}

namespace {

VerifyRow named(std::string name) {
  VerifyRow row;
  row.name = std::move(name);
  return row;
}

void note(VerifyRow& row, const std::string& what) {
  row.passed = false;
  if (row.detail.empty()) row.detail = what;
}

VerifyRow check_order(const Realization& r, const std::vector<PointRef>& pts, std::size_t depth) {
  VerifyRow row = named("order-embedding");
  std::vector<Loc> locs;
  for (const PointRef& p : pts) locs.push_back(r.point_loc(p));
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return locs[a] < locs[b]; });
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    const Loc& a = locs[idx[k]];
    const Loc& b = locs[idx[k + 1]];
    ++row.checked;
    const std::string pair = pts[idx[k]].to_string() + " < " + pts[idx[k + 1]].to_string();
    if (r.same_set(a, b) || !r.dense_between(a, b)) note(row, pair + ": difference is finite");
    for (std::size_t i = 0; i < depth; ++i) {
      if (r.member(a, i) && !r.member(b, i)) {
        note(row, pair + ": index " + std::to_string(i) + " breaks inclusion");
        break;
      }
    }
  }
  return row;
}

VerifyRow check_membership(const Realization& r, const std::vector<PointRef>& pts,
                           const std::vector<ComponentInfo>& comps, std::size_t depth) {
  VerifyRow row = named("membership");
  const FamilyDesc& f = r.layout().family();
  for (const PointRef& p : pts) {
    const bool excluded = point_membership(f, comps, p) == Membership::kExcluded;
    const TriBool got = in_closure(r, r.without(p), CandidateDesc::of_point(r, p), depth);
    if (got == TriBool::kUnknown) {
      ++row.inconclusive;
      continue;
    }
    ++row.checked;
    if ((got == TriBool::kYes) != excluded) {
      note(row, p.to_string() + (excluded ? " excluded but isolated" : " required but a limit"));
    }
  }
  return row;
}

VerifyRow check_isolation(const Realization& r, const std::vector<PointRef>& pts,
                          const std::vector<ComponentInfo>& comps, std::size_t depth) {
  VerifyRow row = named("isolation");
  const FamilyDesc& f = r.layout().family();
  for (const PointRef& p : pts) {
    const bool excluded = point_membership(f, comps, p) == Membership::kExcluded;
    const auto pat = isolating_pattern(r, p, depth);
    if (excluded) {
      ++row.checked;
      if (pat) note(row, p.to_string() + " excluded but isolated by " + pat->to_string());
      continue;
    }
    if (!pat) {
      if (isolating_pattern(r, p, r.size())) {
        ++row.inconclusive;
      } else {
        ++row.checked;
        note(row, p.to_string() + " required but not isolated within capacity");
      }
      continue;
    }
    ++row.checked;
    if (!pat->matches(r, r.point_loc(p))) note(row, p.to_string() + " fails its own pattern");
  }
  return row;
}

// Whole family minus the excluded sampled points and every window eta block
// whose points are excluded.
Subfamily generator_candidate(const Realization& r, const std::vector<PointRef>& pts,
                              const std::vector<ComponentInfo>& comps) {
  const Layout& lay = r.layout();
  Subfamily s;
  Loc from = Loc::at(Rational(-2));
  for (std::size_t b : window_blocks(lay)) {
    if (!lay.block(b).is_tight_eta()) continue;
    s.segments.emplace_back(from, Loc::at(Realization::base(b), -1));
    from = Loc::at(Realization::base(b) + 1);
  }
  s.segments.emplace_back(from, Loc::top_loc());
  for (const PointRef& p : pts) {
    if (!p.eta && point_membership(lay.family(), comps, p) == Membership::kExcluded) {
      s.excluded.push_back(p);
    }
  }
  return s;
}

VerifyRow check_least_set(const Realization& r, const std::vector<PointRef>& pts,
                          const std::vector<ComponentInfo>& comps, std::size_t depth) {
  VerifyRow row = named("least-generating-set");
  const FamilyDesc& f = r.layout().family();
  const Subfamily gen = generator_candidate(r, pts, comps);
  bool generated = true;
  for (const PointRef& p : pts) {
    if (point_membership(f, comps, p) != Membership::kExcluded) continue;
    const TriBool got = in_closure(r, gen, CandidateDesc::of_point(r, p), depth);
    if (got == TriBool::kUnknown) {
      ++row.inconclusive;
      continue;
    }
    ++row.checked;
    if (got == TriBool::kNo) generated = false;
  }
  const bool symbolic = has_least_generating_set(f);
  if (row.inconclusive == 0 && generated != symbolic) {
    note(row, std::string("oracle ") + (generated ? "finds" : "rules out") +
                  " a least generating set, symbolic " + (symbolic ? "has one" : "has none"));
  }
  return row;
}

VerifyRow check_finite(const Realization& r, const ClosureEnumeration& e,
                       const std::vector<PointRef>& pts, std::size_t depth) {
  VerifyRow row = named("finite-character");
  Subfamily s;
  s.points = pts;
  for (const ClosureCandidate& cc : e.candidates) {
    if (cc.status != LimitStatus::kNew || cc.accepted != TriBool::kYes) continue;
    ++row.checked;
    if (in_closure(r, s, cc.cand, depth) != TriBool::kNo) {
      note(row, cc.cand.label + " lies in the closure of finitely many points");
    }
  }
  return row;
}

VerifyRow check_hausdorff(const Realization& r, const std::vector<CandidateDesc>& cands) {
  VerifyRow row = named("hausdorff");
  const std::size_t n = std::min<std::size_t>(cands.size(), 16);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Loc& p = cands[a].loc;
      const Loc& q = cands[b].loc;
      if (r.same_set(p, q)) continue;
      ++row.checked;
      const auto pats = separating_patterns(r, p, q);
      const std::string pair = cands[a].label + " / " + cands[b].label;
      if (!pats) {
        note(row, pair + ": no separating index within capacity");
        continue;
      }
      if (!pats->first.matches(r, p) || !pats->second.matches(r, q) ||
          pats->first.matches(r, q) || pats->second.matches(r, p)) {
        note(row, pair + ": patterns do not separate");
      }
    }
  }
  return row;
}

VerifyRow tally_row(std::string name, const CheckTally& t) {
  VerifyRow row = named(std::move(name));
  row.checked = t.checked;
  row.inconclusive = t.inconclusive;
  if (!t.holds()) note(row, std::to_string(t.violations) + " violations");
  return row;
}

}  // namespace

VerifyReport verify(const FamilyDesc& f, std::size_t depth, std::uint64_t seed) {
  if (depth == 0) throw InvalidArgument("depth must be positive");
  const Realization r(f, seed, std::max(Realization::kDefaultCapacity, 4 * depth));
  const Layout& lay = r.layout();
  const std::vector<ComponentInfo> comps = components(f);
  const std::vector<PointRef> pts = sampled_points(lay, 3);
  const std::vector<CandidateDesc> cands = sample_candidates(r, 3);

  VerifyReport rep;
  rep.family = print_family(f);
  rep.depth = depth;
  rep.seed = seed;
  rep.rows.push_back(check_order(r, pts, depth));

  const ClosureEnumeration e = closure_enumerate(r, depth);
  VerifyRow agree = named("closure-agreement");
  agree.checked = e.candidates.size();
  if (!e.mismatches.empty()) note(agree, e.mismatches.front());
  rep.rows.push_back(agree);

  rep.rows.push_back(check_membership(r, pts, comps, depth));
  rep.rows.push_back(check_isolation(r, pts, comps, depth));
  rep.rows.push_back(check_least_set(r, pts, comps, depth));
  rep.rows.push_back(check_finite(r, e, pts, depth));
  rep.rows.push_back(check_hausdorff(r, cands));

  std::mt19937_64 rng(seed);
  CheckTally add;
  for (int trial = 0; trial < 3 && pts.size() > 1; ++trial) {
    const Loc cut = r.point_loc(pts[rng() % pts.size()]);
    Subfamily a;
    a.segments.emplace_back(Loc::at(Rational(-2)), cut);
    Subfamily b;
    b.segments.emplace_back(cut, Loc::top_loc());
    const CheckTally t = check_additivity(r, a, b, cands, depth);
    add.checked += t.checked;
    add.inconclusive += t.inconclusive;
    add.violations += t.violations;
  }
  rep.rows.push_back(tally_row("additivity", add));

  CheckTally ex;
  for (int trial = 0; trial < 20 && !cands.empty(); ++trial) {
    const Loc cut = r.point_loc(pts[rng() % pts.size()]);
    Subfamily s;
    s.segments.emplace_back(Loc::at(Rational(-2)), cut);
    const CandidateDesc& t1 = cands[rng() % cands.size()];
    const CandidateDesc& t2 = cands[rng() % cands.size()];
    const CheckTally t = check_exchange(r, s, t1, t2, depth);
    ex.checked += t.checked;
    ex.inconclusive += t.inconclusive;
    ex.violations += t.violations;
  }
  rep.rows.push_back(tally_row("exchange", ex));
  return rep;
}

}  // namespace ecl
