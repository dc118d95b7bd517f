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

#include <set>

#include "doctest.h"

#include "eclosure/catalog.hpp"
#include "eclosure/error.hpp"
#include "eclosure/oracle.hpp"

using namespace ecl;

namespace {

Realization realize(const char* expr, std::uint64_t seed = 0) {
  return Realization(parse_family(expr), seed);
}

std::size_t accepted_new(const ClosureEnumeration& e) {
  std::size_t n = 0;
  for (const auto& c : e.candidates) {
    if (c.status == LimitStatus::kNew && c.accepted == TriBool::kYes) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("realize: omega is an increasing chain with infinite differences") {
  const Realization r = realize("omega");
  for (std::int64_t m = 0; m < 6; ++m) {
    const Loc a = r.point_loc(PointRef::at(0, m));
    const Loc b = r.point_loc(PointRef::at(0, m + 1));
    CHECK(a < b);
    CHECK(r.dense_between(a, b));
    CHECK_FALSE(r.same_set(a, b));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.member(a, i)) CHECK(r.member(b, i));
    }
  }
}

TEST_CASE("realize: fin(2) gives two comparable sets with infinite difference") {
  const Realization r = realize("fin(2)");
  const Loc a = r.point_loc(PointRef::at(0, 0));
  const Loc b = r.point_loc(PointRef::at(0, 1));
  CHECK(r.dense_between(a, b));
  std::size_t diff = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK_FALSE((r.member(a, i) && !r.member(b, i)));
    if (r.member(b, i) && !r.member(a, i)) ++diff;
  }
  CHECK(diff > 100);
}

TEST_CASE("realize: gapped eta points differ from the union below them") {
  const Realization r = realize("eta(gapped)");
  for (const PointRef& p : r.layout().sample_points(0, 7)) {
    const Loc at = r.point_loc(p);
    const Loc below = r.union_below(at.x);
    bool witness = false;
    for (std::size_t i = 0; i < 64 && !witness; ++i) {
      witness = r.member(at, i) && !r.member(below, i);
    }
    CHECK_MESSAGE(witness, p.to_string());
  }
}

TEST_CASE("realize: thresholds are deterministic in the seed") {
  const Realization a = realize("zeta +split zeta", 5);
  const Realization b = realize("zeta +split zeta", 5);
  const Realization c = realize("zeta +split zeta", 6);
  REQUIRE(a.size() == b.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.threshold(i).loc == b.threshold(i).loc);
    differs = differs || !(a.threshold(i).loc == c.threshold(i).loc);
  }
  CHECK(differs);
}

TEST_CASE("in_closure: the union of omega is a limit") {
  const Realization r = realize("omega");
  const auto u = CandidateDesc::union_at(r.block_union(0), "sup");
  for (std::size_t d : {1u, 8u, 32u, 64u}) CHECK(in_closure(r, r.whole(), u, d) == TriBool::kYes);
}

TEST_CASE("in_closure: an index pattern no member satisfies is rejected") {
  const Realization r = realize("omega");
  const auto c = CandidateDesc::explicit_set(IndexSet::of({1}), "{1}");
  CHECK(in_closure(r, r.whole(), c, 32) == TriBool::kNo);
}

TEST_CASE("in_closure: gapped eta points are not limits of the rest") {
  const Realization r = realize("eta(gapped)");
  for (const PointRef& p : r.layout().sample_points(0, 5)) {
    CHECK(in_closure(r, r.without(p), CandidateDesc::of_point(r, p), 32) == TriBool::kNo);
  }
}

TEST_CASE("in_closure: an absorbed endpoint is a limit of the rest") {
  const Realization r = realize("omega +absorbed fin(1)");
  const PointRef p = PointRef::at(1, 0);
  CHECK(in_closure(r, r.without(p), CandidateDesc::of_point(r, p), 32) == TriBool::kYes);
  const PointRef q = PointRef::at(0, 3);
  CHECK(in_closure(r, r.without(q), CandidateDesc::of_point(r, q), 32) == TriBool::kNo);
}

TEST_CASE("in_closure: members are in the closure, finite subfamilies add nothing") {
  const Realization r = realize("zeta");
  Subfamily s;
  s.points = {PointRef::at(0, 0), PointRef::at(0, 4)};
  CHECK(in_closure(r, s, CandidateDesc::of_point(r, PointRef::at(0, 4)), 16) == TriBool::kYes);
  CHECK(in_closure(r, s, CandidateDesc::of_point(r, PointRef::at(0, 2)), 16) == TriBool::kNo);
  CHECK(in_closure(r, s, CandidateDesc::union_at(r.block_union(0), "sup"), 16) == TriBool::kNo);
}

TEST_CASE("in_closure: depth bounds") {
  const Realization r = realize("omega");
  const auto u = CandidateDesc::union_at(r.block_union(0), "sup");
  CHECK_THROWS_AS(in_closure(r, r.whole(), u, 0), InvalidArgument);
  CHECK_THROWS_AS(in_closure(r, r.whole(), u, r.size() + 1), InvalidArgument);
}

TEST_CASE("in_closure: answers never flip from yes to no as depth grows") {
  for (const char* expr : {"omega", "zeta +split zeta", "eta(tight)", "eta(gapped)",
                           "omega +absorbed fin(1)", "(zeta +split)^omega"}) {
    const Realization r = realize(expr, 3);
    for (const CandidateDesc& c : sample_candidates(r, 3)) {
      for (const Subfamily& s : {r.whole(), c.point ? r.without(*c.point) : r.whole()}) {
        bool seen_yes = false;
        for (std::size_t d : {8u, 16u, 32u, 64u, 128u}) {
          const TriBool t = in_closure(r, s, c, d);
          if (seen_yes) CHECK_MESSAGE(t != TriBool::kNo, expr << " " << c.label << " d=" << d);
          seen_yes = seen_yes || t == TriBool::kYes;
        }
      }
    }
  }
}

TEST_CASE("closure_enumerate: zeta has exactly two new limits") {
  const auto e = closure_enumerate(realize("zeta"), 32);
  CHECK(accepted_new(e) == 2);
  CHECK(e.new_count == 2u);
  CHECK(e.mismatches.empty());
}

TEST_CASE("closure_enumerate: fin(5) has none") {
  const auto e = closure_enumerate(realize("fin(5)"), 32);
  CHECK(e.candidates.empty());
  CHECK(e.new_count == 0u);
}

TEST_CASE("closure_enumerate: merged junction yields one limit") {
  const auto e = closure_enumerate(realize("omega +merged omega*"), 64);
  CHECK(accepted_new(e) == 1);
  CHECK(e.mismatches.empty());
  const auto split = closure_enumerate(realize("omega +split omega*"), 64);
  CHECK(accepted_new(split) == 2);
}

TEST_CASE("closure_enumerate: tight eta reports the continuum marker") {
  const auto e = closure_enumerate(realize("eta(tight)"), 32);
  CHECK(e.continuum);
  CHECK_FALSE(e.new_count.has_value());
  CHECK(e.mismatches.empty());
}

TEST_CASE("isolating_pattern: gapped eta points are isolated") {
  const Realization r = realize("eta(gapped)");
  const auto pts = r.layout().sample_points(0, 5);
  for (const PointRef& p : pts) {
    const auto f = isolating_pattern(r, p, 64);
    REQUIRE_MESSAGE(f.has_value(), p.to_string());
    CHECK(f->probe.size() <= 16);
    CHECK(f->matches(r, r.point_loc(p)));
    for (const PointRef& q : r.layout().sample_points(0, 40)) {
      if (q == p) continue;
      CHECK_FALSE(f->matches(r, r.point_loc(q)));
    }
  }
}

TEST_CASE("isolating_pattern: tight eta points are not") {
  const Realization r = realize("eta(tight)");
  for (const PointRef& p : r.layout().sample_points(0, 20)) {
    CHECK_FALSE(isolating_pattern(r, p, 64).has_value());
  }
}

TEST_CASE("isolating_pattern: fin(2)") {
  const Realization r = realize("fin(2)");
  const auto f = isolating_pattern(r, PointRef::at(0, 0), 16);
  REQUIRE(f.has_value());
  CHECK(f->matches(r, r.point_loc(PointRef::at(0, 0))));
  CHECK_FALSE(f->matches(r, r.point_loc(PointRef::at(0, 1))));
}

TEST_CASE("check_additivity examples") {
  CHECK(check_additivity(parse_family("omega"), parse_family("omega*"), 0, 32).holds());
  CHECK(check_additivity(parse_family("fin(3)"), parse_family("fin(4)"), 0, 32).holds());
  const CheckTally t = check_additivity(parse_family("zeta"), parse_family("eta(gapped)"), 0, 32);
  CHECK(t.holds());
  CHECK(t.checked > 0);
  CHECK_THROWS_AS(check_additivity(parse_family("(zeta)^omega"), parse_family("omega"), 0, 32),
                  Unsupported);
}

TEST_CASE("check_exchange examples") {
  const Realization r = realize("omega");
  const auto sup = CandidateDesc::union_at(r.block_union(0), "sup");
  const auto p0 = CandidateDesc::of_point(r, PointRef::at(0, 0));
  const auto p5 = CandidateDesc::of_point(r, PointRef::at(0, 5));
  // t2 already in the closure of s: vacuous.
  CHECK(check_exchange(r, r.whole(), p0, sup, 32).holds());
  Subfamily none;
  CHECK(check_exchange(r, none, sup, sup, 32).holds());
  CHECK(check_exchange(r, none, p0, p5, 32).holds());
  for (const auto& a : sample_candidates(r, 4)) {
    for (const auto& b : sample_candidates(r, 4)) {
      CHECK(check_exchange(r, none, a, b, 32).holds());
    }
  }
}

TEST_CASE("separating_patterns examples") {
  auto separated = [](const Realization& r, const Loc& p, const Loc& q) {
    const auto s = separating_patterns(r, p, q);
    REQUIRE(s.has_value());
    CHECK(s->first.probe == s->second.probe);
    CHECK(s->first.matches(r, p));
    CHECK(s->second.matches(r, q));
    CHECK_FALSE(s->first.matches(r, q));
    CHECK_FALSE(s->second.matches(r, p));
  };
  const Realization w = realize("omega");
  separated(w, w.point_loc(PointRef::at(0, 2)), w.point_loc(PointRef::at(0, 5)));
  separated(w, w.point_loc(PointRef::at(0, 5)), w.point_loc(PointRef::at(0, 2)));
  const Realization f = realize("fin(2)");
  separated(f, f.point_loc(PointRef::at(0, 0)), f.point_loc(PointRef::at(0, 1)));
  const Realization g = realize("eta(gapped)");
  const auto pts = g.layout().sample_points(0, 6);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      separated(g, g.point_loc(pts[a]), g.point_loc(pts[b]));
    }
  }
  CHECK_FALSE(separating_patterns(w, w.point_loc(PointRef::at(0, 1)),
                                  w.point_loc(PointRef::at(0, 1)))
                  .has_value());
}

TEST_CASE("verify: command examples pass") {
  CHECK(verify(parse_family("omega"), 32, 0).passed());
  CHECK(verify(parse_family("eta(gapped)"), 64, 0).passed());
  const VerifyReport fin = verify(parse_family("fin(2)"), 16, 0);
  CHECK(fin.passed());
  const auto e = closure_enumerate(Realization(parse_family("fin(2)"), 0), 16);
  CHECK(e.new_count == 0u);
}

TEST_CASE("verify: every catalog family passes") {
  for (const CatalogEntry& e : builtin_catalog()) {
    for (std::uint64_t seed : {0u, 7u}) {
      const VerifyReport rep = verify(parse_family(e.expr), 32, seed);
      for (const VerifyRow& row : rep.rows) {
        CAPTURE(e.expr);
        CAPTURE(row.name);
        CAPTURE(row.detail);
        CHECK(row.passed);
      }
    }
  }
}
